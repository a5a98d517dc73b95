#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cpcq/common.hpp"

namespace cpcq {

/// Seeded pseudo-random stream. Equal (seed, stream) pairs give bit-identical
/// draws on every platform: the engine is std::mt19937_64 (fully specified by
/// the standard) keyed through std::seed_seq, and the conversions to doubles
/// below avoid the implementation-defined std:: distributions.
class RandomSource {
 public:
  RandomSource(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller, one draw per call, no cached spare).
  double normal();
  complex complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/// Haar-distributed unitary from the QR decomposition of a Ginibre matrix.
UnitaryMatrix random_unitary(int dim, RandomSource& rng);

/// Uniformly distributed unit vector.
StateVector random_state(int dim, RandomSource& rng);

/// Random point of the probability simplex (normalized exponentials).
std::vector<double> random_distribution(int dim, RandomSource& rng);

}  // namespace cpcq
