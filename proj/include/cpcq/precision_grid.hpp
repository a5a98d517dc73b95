#pragma once

#include <optional>
#include <string_view>

#include "cpcq/common.hpp"

namespace cpcq::grid {

/// Precision improvement factor eps / eps' > 1. Ratios that are powers of
/// sqrt(2) are kept exactly as the exponent k in 2^(k/2) so that log2 counts
/// stay exact rationals.
class GridRatio {
 public:
  /// 2^(half_powers / 2); half_powers >= 1.
  static GridRatio sqrt2_power(int half_powers);
  /// Arbitrary ratio > 1. Values within 1e-12 (in log2) of a power of sqrt(2)
  /// are snapped to the exact form.
  static GridRatio from_value(double ratio);
  /// "sqrt2", "sqrt2^K" or a decimal number.
  static GridRatio parse(std::string_view text);

  double value() const;
  double log2() const;
  std::optional<int> half_powers() const { return half_powers_; }

 private:
  std::optional<int> half_powers_;
  double value_ = 0.0;
};

/// Number of points to examine when refining a gate command from eps to eps'.
struct GridQuery {
  /// Throws InputError unless n_bits >= 1, 0 < eps' < eps and n_gates >= 1.
  GridQuery(int n_bits, double eps, double eps_prime, int n_gates = 1);
  GridQuery(int n_bits, double eps, GridRatio ratio, int n_gates = 1);

  int n_bits;
  double eps;
  double eps_prime;
  GridRatio ratio;
  int n_gates;
};

/// dim SU(2^n) = 4^n - 1.
BigInt su_dimension(int n_bits);

struct GridBound {
  BigInt d;
  std::optional<BigRational> log2_exact;  // d k / 2 when the ratio is 2^(k/2)
  double log2_points = 0.0;               // d log2(eps / eps')
  double decimal_order = 0.0;             // log10 of the point count
  std::optional<BigInt> points;           // the count itself when it is 2^m, m <= 4096
};

/// (eps / eps')^d grid points, reported through its logarithm.
GridBound grid_point_lower_bound(const GridQuery& q);

inline constexpr double kDefaultBudgetLog2 = 60.0;

struct BlindSearchReport {
  GridBound grid;
  double log2_gates = 0.0;
  double log2_trials = 0.0;
  double log2_total = 0.0;  // grid points x gates x trials per command
  double budget_log2 = kDefaultBudgetLog2;
  bool hopeless = false;    // log2_total > budget_log2
};

/// Work needed to find a better command by trying every grid point.
BlindSearchReport blind_search_verdict(const GridQuery& q, const BigInt& trials_per_command,
                                       double budget_log2 = kDefaultBudgetLog2);

/// log2 of a positive integer, accurate for values far beyond double range.
double log2_of(const BigInt& x);

}  // namespace cpcq::grid
