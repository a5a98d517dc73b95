#pragma once

#include <cstdint>

#include "cpcq/distribution.hpp"
#include "cpcq/random.hpp"

namespace cpcq {

/// Draws n_trials i.i.d. outcomes by inverse CDF on the cumulative sums taken
/// in index order. A uniform u selects the first index whose cumulative sum
/// exceeds u, so ties go to the lower index and zero-probability outcomes are
/// never drawn.
OutcomeCounts sample_outcomes(const OutcomeDistribution& dist, std::uint64_t n_trials,
                              RandomSource& rng);

/// Splits n_trials over `n_streams` streams of `seed` (stream k gets
/// n_trials / n_streams trials, plus one for k < remainder), samples the
/// streams concurrently and adds the tallies. The result depends only on
/// (seed, n_streams), never on scheduling.
OutcomeCounts sample_outcomes_parallel(const OutcomeDistribution& dist, std::uint64_t n_trials,
                                       std::uint64_t seed, unsigned n_streams);

}  // namespace cpcq
