#include "cpcq/sampling.hpp"

#include <algorithm>
#include <future>
#include <vector>

namespace cpcq {

OutcomeCounts sample_outcomes(const OutcomeDistribution& dist, std::uint64_t n_trials,
                              RandomSource& rng) {
  require_distribution(dist.probs, "sample_outcomes");

  const std::size_t k = dist.probs.size();
  std::vector<double> cumulative(k);
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const double p = std::max(0.0, dist.probs[j]);
    running += p;
    cumulative[j] = running;
    if (p > 0.0) last_positive = j;
  }
  const double total = running;

  OutcomeCounts out;
  out.counts.assign(k, 0);
  for (std::uint64_t t = 0; t < n_trials; ++t) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto j = static_cast<std::size_t>(it - cumulative.begin());
    // u * total can round up to the final cumulative sum.
    if (j > last_positive) j = last_positive;
    ++out.counts[j];
  }
  return out;
}

OutcomeCounts sample_outcomes_parallel(const OutcomeDistribution& dist, std::uint64_t n_trials,
                                       std::uint64_t seed, unsigned n_streams) {
  if (n_streams == 0) throw InputError("sample_outcomes_parallel: need at least one stream");
  require_distribution(dist.probs, "sample_outcomes_parallel");

  std::vector<std::future<OutcomeCounts>> parts;
  parts.reserve(n_streams);
  const std::uint64_t base = n_trials / n_streams;
  const std::uint64_t extra = n_trials % n_streams;
  for (unsigned s = 0; s < n_streams; ++s) {
    const std::uint64_t share = base + (s < extra ? 1 : 0);
    parts.push_back(std::async(std::launch::async, [&dist, share, seed, s] {
      RandomSource rng(seed, s);
      return sample_outcomes(dist, share, rng);
    }));
  }

  OutcomeCounts total;
  total.counts.assign(dist.probs.size(), 0);
  for (auto& f : parts) {
    const auto c = f.get();
    for (std::size_t j = 0; j < c.counts.size(); ++j) total.counts[j] += c.counts[j];
  }
  return total;
}

}  // namespace cpcq
