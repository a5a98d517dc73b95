#pragma once

#include <optional>

#include "cpcq/common.hpp"

namespace cpcq::timing {

/// Hydrogen-maser timing precision, fractional.
inline constexpr double kMaserPrecision = 1e-15;

/// NOT-gate duration and the controller's timing error. The implied Bloch
/// rotation rate is omega = pi / t_not.
class TimingBudget {
 public:
  /// Throws InputError unless t_not > 0 and delta_t >= 0, both finite.
  TimingBudget(double t_not, double delta_t);

  double t_not() const { return t_not_; }
  double delta_t() const { return delta_t_; }
  double omega() const;
  /// delta_t / t_not
  double relative_error() const { return delta_t_ / t_not_; }

 private:
  double t_not_;
  double delta_t_;
};

/// Largest allowed Delta T / T(NOT) for a rotation-angle error eps: eps / pi.
double max_relative_timing_error(double epsilon);

/// Delta T / T(NOT) bound for n-bit search, 2^(-n/2).
double search_timing_bound(int n_bits);

/// 2^(-n/2) as an exact rational; nullopt for odd n, where it is irrational.
std::optional<BigRational> search_timing_bound_exact(int n_bits);

/// True iff a clock of the given fractional precision beats the search bound.
bool maser_feasible(int n_bits, double clock_precision = kMaserPrecision);

/// Smallest n for which maser_feasible is false.
int first_infeasible_bits(double clock_precision = kMaserPrecision);

struct MistimedNot {
  StateVector state;
  double angle_error = 0.0;  // omega * Delta T
};

/// Rotates a qubit state about the x axis by pi (1 + Delta T / T(NOT)), i.e. a
/// NOT gate held on for Delta T too long; the global phase is dropped.
MistimedNot simulate_mistimed_not(const TimingBudget& budget, const StateVector& s);

/// Angle between two qubit states on the Bloch sphere, 2 arccos|<a|b>|.
double bloch_angle(const StateVector& a, const StateVector& b);

}  // namespace cpcq::timing
