#include "cpcq/distribution.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace cpcq {

void require_distribution(const std::vector<double>& p, const char* what) {
  if (p.empty()) throw InputError(std::string(what) + ": empty distribution");
  double total = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!std::isfinite(p[j]) || p[j] < -kProbTol) {
      throw InputError(std::string(what) + ": entry " + std::to_string(j) + " = " +
                       std::to_string(p[j]) + " is not a probability");
    }
    total += p[j];
  }
  if (std::abs(total - 1.0) > kProbTol) {
    throw InputError(std::string(what) + ": entries sum to " + std::to_string(total) +
                     ", not 1");
  }
}

std::uint64_t OutcomeCounts::n_trials() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::vector<double> OutcomeCounts::frequencies() const {
  const auto n = n_trials();
  if (n == 0) throw InputError("outcome counts: zero trials, frequencies undefined");
  std::vector<double> f(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) {
    f[j] = static_cast<double>(counts[j]) / static_cast<double>(n);
  }
  return f;
}

RelativeFrequencies relative_frequencies(const CountsTable& table) {
  RelativeFrequencies out;
  for (const auto& [b, c] : table) out.emplace(b, c.frequencies());
  return out;
}

WeightedCommandSet::WeightedCommandSet(std::vector<std::pair<Command, double>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("weighted command set is empty");
  std::set<Command> seen;
  double total = 0.0;
  for (const auto& [b, w] : entries_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InputError("weight for command \"" + b.bits() + "\" is negative or not finite");
    }
    if (!seen.insert(b).second) {
      throw InputError("command \"" + b.bits() + "\" appears twice in weighted set");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kProbTol) {
    throw InputError("command weights sum to " + std::to_string(total) + ", not 1");
  }
}

WeightedCommandSet WeightedCommandSet::uniform(const std::vector<Command>& commands) {
  std::vector<std::pair<Command, double>> e;
  e.reserve(commands.size());
  const double w = commands.empty() ? 0.0 : 1.0 / static_cast<double>(commands.size());
  for (const auto& b : commands) e.emplace_back(b, w);
  return WeightedCommandSet(std::move(e));
}

std::vector<Command> WeightedCommandSet::commands() const {
  std::vector<Command> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

}  // namespace cpcq
