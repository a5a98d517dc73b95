#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cpcq/command.hpp"
#include "cpcq/common.hpp"

namespace cpcq {

/// Pr(j|b) for one command. `eigenvalues[j]` labels outcome j when the
/// distribution came from a model; it is empty for measured frequencies.
struct OutcomeDistribution {
  std::vector<double> probs;
  std::vector<double> eigenvalues;

  std::size_t size() const { return probs.size(); }
};

/// Throws InputError unless every entry is >= -kProbTol and the entries sum to
/// 1 within kProbTol.
void require_distribution(const std::vector<double>& p, const char* what);

/// Tally of outcomes for one command.
struct OutcomeCounts {
  std::vector<std::uint64_t> counts;

  std::uint64_t n_trials() const;
  std::vector<double> frequencies() const;

  friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

/// Per-command relative frequencies, outcome j being the j-th smallest
/// eigenvalue of whichever model the data is compared against.
using RelativeFrequencies = std::map<Command, std::vector<double>>;

/// Per-command counts, the contents of an outcome counts file.
using CountsTable = std::map<Command, OutcomeCounts>;

RelativeFrequencies relative_frequencies(const CountsTable& table);

/// Commands with non-negative weights summing to 1.
class WeightedCommandSet {
 public:
  /// Throws InputError on negative weights, duplicate commands, or a sum that
  /// is not 1 within kProbTol.
  explicit WeightedCommandSet(std::vector<std::pair<Command, double>> entries);

  static WeightedCommandSet uniform(const std::vector<Command>& commands);

  const std::vector<std::pair<Command, double>>& entries() const { return entries_; }
  std::vector<Command> commands() const;

 private:
  std::vector<std::pair<Command, double>> entries_;
};

}  // namespace cpcq
