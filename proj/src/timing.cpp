#include "cpcq/timing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cpcq/grover.hpp"
#include "cpcq/linalg.hpp"

namespace cpcq::timing {

TimingBudget::TimingBudget(double t_not, double delta_t) : t_not_(t_not), delta_t_(delta_t) {
  if (!std::isfinite(t_not) || t_not <= 0.0) {
    throw InputError("timing budget: T(NOT) must be a positive number of seconds");
  }
  if (!std::isfinite(delta_t) || delta_t < 0.0) {
    throw InputError("timing budget: Delta T must be non-negative");
  }
}

double TimingBudget::omega() const { return std::numbers::pi / t_not_; }

double max_relative_timing_error(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw InputError("max_relative_timing_error: epsilon must be positive");
  }
  return epsilon / std::numbers::pi;
}

double search_timing_bound(int n_bits) { return grover::inverse_sqrt_size(n_bits); }

std::optional<BigRational> search_timing_bound_exact(int n_bits) {
  if (n_bits < 1) throw InputError("search_timing_bound_exact: n_bits must be at least 1");
  if (n_bits % 2 != 0) return std::nullopt;
  return BigRational(BigInt(1), BigInt(1) << (n_bits / 2));
}

bool maser_feasible(int n_bits, double clock_precision) {
  if (!std::isfinite(clock_precision) || clock_precision <= 0.0) {
    throw InputError("maser_feasible: clock precision must be positive");
  }
  return clock_precision < search_timing_bound(n_bits);
}

int first_infeasible_bits(double clock_precision) {
  // 2^(-n/2) underflows to zero well before this limit.
  for (int n = 1; n < 4000; ++n) {
    if (!maser_feasible(n, clock_precision)) return n;
  }
  throw InvariantViolation("first_infeasible_bits: no threshold found");
}

MistimedNot simulate_mistimed_not(const TimingBudget& budget, const StateVector& s) {
  require_dimension(s, 2, "simulate_mistimed_not");
  // i R_x(pi + a) with a = pi dT/T; writing the half angle as pi/2 + a/2 keeps
  // the dT = 0 case exactly equal to X.
  const double half_excess = 0.5 * std::numbers::pi * budget.relative_error();
  const complex diag(0.0, -std::sin(half_excess));
  const complex off(std::cos(half_excess), 0.0);
  UnitaryMatrix r(2, 2);
  r << diag, off, off, diag;
  return {apply_unitary(r, s), budget.omega() * budget.delta_t()};
}

double bloch_angle(const StateVector& a, const StateVector& b) {
  require_dimension(a, 2, "bloch_angle");
  require_dimension(b, 2, "bloch_angle");
  const complex overlap = a.dot(b);
  return 2.0 * std::atan2((b - overlap * a).norm(), std::abs(overlap));
}

}  // namespace cpcq::timing
