#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "cpcq/precision_grid.hpp"

using namespace cpcq;
using namespace cpcq::grid;

TEST_CASE("su_dimension") {
  CHECK(su_dimension(1) == 3);
  CHECK(su_dimension(5) == 1023);
  CHECK(su_dimension(10) == 1048575);
  for (int n = 1; n < 200; ++n) CHECK(su_dimension(n + 1) == 4 * su_dimension(n) + 3);
  CHECK_THROWS_AS(su_dimension(0), InputError);
}

TEST_CASE("grid ratio") {
  CHECK(GridRatio::parse("sqrt2").half_powers() == 1);
  CHECK(GridRatio::parse("sqrt2^4").half_powers() == 4);
  CHECK(GridRatio::parse("2").half_powers() == 2);
  CHECK(GridRatio::parse("1.4142135623730951").half_powers() == 1);
  CHECK_FALSE(GridRatio::parse("3").half_powers().has_value());
  CHECK(GridRatio::parse("3").log2() == doctest::Approx(std::log2(3.0)));
  CHECK_THROWS_AS(GridRatio::parse("1"), InputError);
  CHECK_THROWS_AS(GridRatio::parse("0.5"), InputError);
  CHECK_THROWS_AS(GridRatio::parse("sqrt2^x"), InputError);
  CHECK_THROWS_AS(GridRatio::parse("sqrt2^0"), InputError);
  CHECK_THROWS_AS(GridRatio::parse("abc"), InputError);
}

TEST_CASE("grid point lower bound") {
  CHECK_THROWS_AS(GridQuery(3, 0.1, 0.1), InputError);
  CHECK_THROWS_AS(GridQuery(3, 0.1, 0.2), InputError);
  CHECK_THROWS_AS(GridQuery(0, 0.1, 0.05), InputError);

  const auto g5 = grid_point_lower_bound(GridQuery(5, 0.5, GridRatio::sqrt2_power(1)));
  CHECK(g5.d == 1023);
  CHECK(*g5.log2_exact == BigRational(1023, 2));
  CHECK(g5.log2_points == 511.5);
  CHECK(g5.decimal_order == doctest::Approx(153.98).epsilon(1e-4));
  CHECK_FALSE(g5.points.has_value());

  const auto g2 = grid_point_lower_bound(GridQuery(2, 0.5, 0.25));
  CHECK(g2.log2_points == 15.0);
  CHECK(*g2.points == 32768);

  // Same bound from a ratio given as eps / eps' that is not a power of sqrt(2).
  const auto g3 = grid_point_lower_bound(GridQuery(2, 0.3, 0.1));
  CHECK_FALSE(g3.log2_exact.has_value());
  CHECK(g3.log2_points == doctest::Approx(15.0 * std::log2(3.0)).epsilon(1e-14));

  // Exact for every n at ratio 2^(k/2): d k / 2.
  for (int n = 1; n <= 64; ++n) {
    for (int k = 1; k <= 6; ++k) {
      const auto g = grid_point_lower_bound(GridQuery(n, 1.0, GridRatio::sqrt2_power(k)));
      CHECK(*g.log2_exact == BigRational(su_dimension(n) * k, 2));
      if (n > 1) {
        const auto smaller = grid_point_lower_bound(GridQuery(n - 1, 1.0, GridRatio::sqrt2_power(k)));
        CHECK(g.log2_points > smaller.log2_points);
      }
      if (k > 1) {
        const auto smaller = grid_point_lower_bound(GridQuery(n, 1.0, GridRatio::sqrt2_power(k - 1)));
        CHECK(g.log2_points > smaller.log2_points);
      }
    }
  }
}

TEST_CASE("blind search verdict") {
  const GridQuery q5(5, 0.5, GridRatio::sqrt2_power(1));
  const auto v5 = blind_search_verdict(q5, 16);
  CHECK(v5.hopeless);
  CHECK(v5.log2_total == 511.5 + 4.0);

  const GridQuery q1(1, 0.5, GridRatio::sqrt2_power(1));
  const auto v1 = blind_search_verdict(q1, 8);
  CHECK_FALSE(v1.hopeless);
  CHECK(v1.log2_total == 1.5 + 3.0);

  const GridQuery q5g2(5, 0.5, GridRatio::sqrt2_power(1), 2);
  CHECK(blind_search_verdict(q5g2, 16).log2_total == v5.log2_total + 1.0);

  CHECK_FALSE(blind_search_verdict(q5, 16, 600.0).hopeless);
  CHECK_THROWS_AS(blind_search_verdict(q5, 0), InputError);
  CHECK(log2_of(BigInt(1) << 5000) == 5000.0);
  CHECK(log2_of(BigInt(3)) == doctest::Approx(std::log2(3.0)));
}
