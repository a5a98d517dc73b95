#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "cpcq/grover.hpp"
#include "cpcq/timing.hpp"
#include "support.hpp"

using namespace cpcq;
using namespace cpcq::timing;
using std::numbers::pi;

TEST_CASE("timing budget") {
  const TimingBudget b(2e-8, 1e-10);
  CHECK(std::abs(b.omega() * b.t_not() - pi) < 1e-12);
  CHECK(b.relative_error() == doctest::Approx(0.005));
  CHECK_THROWS_AS(TimingBudget(0.0, 0.0), InputError);
  CHECK_THROWS_AS(TimingBudget(1.0, -1.0), InputError);
}

TEST_CASE("relative timing error") {
  CHECK(max_relative_timing_error(pi) == 1.0);
  CHECK(max_relative_timing_error(0.01) == doctest::Approx(0.0031830988618379).epsilon(1e-13));
  CHECK(max_relative_timing_error(grover::perturbation_error(4)) ==
        doctest::Approx(0.15915494309189535).epsilon(1e-14));
  CHECK_THROWS_AS(max_relative_timing_error(0.0), InputError);

  for (int n = 1; n <= 100; ++n) {
    const double lhs = max_relative_timing_error(grover::perturbation_error(n));
    const double rhs = 2.0 / pi * search_timing_bound(n);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
  }
}

TEST_CASE("search timing bound") {
  CHECK(search_timing_bound(2) == 0.5);
  CHECK(search_timing_bound(100) == std::ldexp(1.0, -50));
  CHECK(search_timing_bound(30) == std::ldexp(1.0, -15));
  CHECK(std::abs(search_timing_bound(99) - std::pow(2.0, -49.5)) < 1e-30);
  CHECK(*search_timing_bound_exact(100) == BigRational(1, BigInt(1) << 50));
  CHECK_FALSE(search_timing_bound_exact(99).has_value());
}

TEST_CASE("maser feasibility") {
  CHECK(maser_feasible(99, 1e-15));
  CHECK_FALSE(maser_feasible(100, 1e-15));
  CHECK(maser_feasible(10, 1e-6));
  CHECK(first_infeasible_bits(1e-15) == 100);
  CHECK(first_infeasible_bits(kMaserPrecision) == 100);
  CHECK(first_infeasible_bits(0.25) == 4);
  CHECK_THROWS_AS(maser_feasible(10, 0.0), InputError);
}

namespace {

// Equal up to a global phase.
bool same_ray(const StateVector& a, const StateVector& b, double tol) {
  return std::abs(std::abs(a.dot(b)) - 1.0) < tol;
}

}  // namespace

TEST_CASE("mistimed NOT") {
  const StateVector zero = test::basis(2, 0);
  const StateVector one = test::basis(2, 1);

  const auto exact = simulate_mistimed_not(TimingBudget(1.0, 0.0), zero);
  CHECK(exact.angle_error == 0.0);
  CHECK(same_ray(exact.state, one, 1e-15));
  CHECK(bloch_angle(one, exact.state) == 0.0);

  const auto off = simulate_mistimed_not(TimingBudget(1.0, 0.01), zero);
  CHECK(off.angle_error == doctest::Approx(0.01 * pi).epsilon(1e-14));
  CHECK(std::abs(bloch_angle(one, off.state) - 0.01 * pi) < 1e-12);

  const auto full = simulate_mistimed_not(TimingBudget(1.0, 1.0), zero);
  const auto back = simulate_mistimed_not(TimingBudget(1.0, 1.0), full.state);
  CHECK(same_ray(back.state, zero, 1e-12));

  RandomSource rng(21, 0);
  for (int i = 0; i < 100; ++i) {
    const StateVector s = random_state(2, rng);
    const auto once = simulate_mistimed_not(TimingBudget(3e-8, 0.0), s);
    const auto twice = simulate_mistimed_not(TimingBudget(3e-8, 0.0), once.state);
    CHECK(same_ray(twice.state, s, kUnitTol));
    const double dt = 1e-10 * rng.uniform();
    const TimingBudget b1(3e-8, dt), b2(3e-8, 2.0 * dt);
    CHECK(simulate_mistimed_not(b2, s).angle_error == 2.0 * simulate_mistimed_not(b1, s).angle_error);
  }
  CHECK_THROWS_AS(simulate_mistimed_not(TimingBudget(1.0, 0.0), test::basis(3, 0)), InputError);
}
