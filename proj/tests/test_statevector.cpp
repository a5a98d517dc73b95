#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/SVD>
#include <boost/math/distributions/chi_squared.hpp>

#include "cpcq/grover.hpp"
#include "cpcq/linalg.hpp"
#include "cpcq/sampling.hpp"
#include "support.hpp"

using namespace cpcq;
using cpcq::test::basis;

TEST_CASE("apply_unitary") {
  RandomSource rng(1, 0);
  const StateVector s = random_state(5, rng);
  CHECK(apply_unitary(CMatrix::Identity(5, 5), s) == s);
  CHECK(apply_unitary(test::not_gate(), basis(2, 0)) == basis(2, 1));
  CHECK_THROWS_AS(apply_unitary(CMatrix::Identity(3, 3), s), InputError);

  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 1 + trial % 16;
    const auto u = random_unitary(dim, rng);
    const auto v = random_state(dim, rng);
    const auto got = apply_unitary(u, v);
    const auto want = test::ref_apply(u, v);
    for (int i = 0; i < dim; ++i) CHECK(std::abs(got[i] - want[static_cast<std::size_t>(i)]) < 1e-13);
    CHECK(std::abs(got.norm() - 1.0) <= kUnitTol);
  }
}

TEST_CASE("random source") {
  RandomSource a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  bool differs_stream = false, differs_seed = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    differs_stream |= x != c.next_u64();
    differs_seed |= x != d.next_u64();
  }
  CHECK(differs_stream);
  CHECK(differs_seed);

  RandomSource r(3, 0);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double z = r.normal();
    sum += z;
    sq += z * z;
  }
  // Mean and variance of n standard normals, five standard errors.
  CHECK(std::abs(sum / n) < 5.0 / std::sqrt(n));
  CHECK(std::abs(sq / n - 1.0) < 5.0 * std::sqrt(2.0 / n));

  for (int dim = 1; dim <= 8; ++dim) {
    const auto u = random_unitary(dim, r);
    CHECK(unitarity_residual(u) < 1e-12);
    CHECK(std::abs(random_state(dim, r).norm() - 1.0) < 1e-12);
    const auto p = random_distribution(dim, r);
    double total = 0.0;
    for (double x : p) total += x;
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("sample_outcomes") {
  SUBCASE("point mass") {
    RandomSource rng(0, 0);
    const auto c = sample_outcomes({{1.0, 0.0}, {0.0, 1.0}}, 1000, rng);
    CHECK(c.counts == std::vector<std::uint64_t>{1000, 0});
  }
  SUBCASE("zero-probability tail is never drawn") {
    RandomSource rng(0, 1);
    const auto c = sample_outcomes({{0.5, 0.5, 0.0}, {0.0, 1.0, 2.0}}, 100000, rng);
    CHECK(c.counts[2] == 0);
    CHECK(c.n_trials() == 100000);
  }
  SUBCASE("binomial concentration") {
    RandomSource rng(12345, 0);
    const std::uint64_t n = 1000000;
    const auto c = sample_outcomes({{0.5, 0.5}, {0.0, 1.0}}, n, rng);
    const double sigma = std::sqrt(n * 0.25);
    CHECK(std::abs(static_cast<double>(c.counts[0]) - n / 2.0) < 5.0 * sigma);
    CHECK(c.counts[0] + c.counts[1] == n);
  }
  SUBCASE("chi-square against uniform") {
    RandomSource rng(777, 0);
    const std::uint64_t n = 400000;
    const auto c = sample_outcomes({{0.25, 0.25, 0.25, 0.25}, {0, 1, 2, 3}}, n, rng);
    double chi2 = 0.0;
    for (auto k : c.counts) {
      const double e = n / 4.0;
      chi2 += (static_cast<double>(k) - e) * (static_cast<double>(k) - e) / e;
    }
    const boost::math::chi_squared dist(3.0);
    CHECK(chi2 < boost::math::quantile(dist, 0.999));
  }
  SUBCASE("reproducible, and parallel counts independent of scheduling") {
    RandomSource r1(9, 4), r2(9, 4);
    const OutcomeDistribution dist{{0.1, 0.2, 0.3, 0.4}, {0, 1, 2, 3}};
    CHECK(sample_outcomes(dist, 5000, r1) == sample_outcomes(dist, 5000, r2));
    const auto p1 = sample_outcomes_parallel(dist, 10001, 9, 4);
    const auto p2 = sample_outcomes_parallel(dist, 10001, 9, 4);
    CHECK(p1 == p2);
    CHECK(p1.n_trials() == 10001);
  }
  SUBCASE("non-distribution rejected") {
    RandomSource rng(0, 0);
    CHECK_THROWS_AS(sample_outcomes({{0.5, 0.6}, {0, 1}}, 10, rng), InputError);
    CHECK_THROWS_AS(sample_outcomes({{1.5, -0.5}, {0, 1}}, 10, rng), InputError);
  }
}

TEST_CASE("spectral_norm") {
  for (int n : {1, 3, 16}) CHECK(spectral_norm(CMatrix::Identity(n, n)) == doctest::Approx(1.0));
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -4.0;
  CHECK(spectral_norm(d) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(spectral_norm(CMatrix::Zero(3, 3)) == 0.0);

  CMatrix bad = CMatrix::Identity(2, 2);
  bad(0, 1) = complex(NAN, 0.0);
  CHECK_THROWS_AS(spectral_norm(bad), InputError);

  const auto diff = grover::reflection_about(grover::uniform_state(4)) -
                    grover::reflection_about(grover::perturbed_state(4));
  CHECK(std::abs(spectral_norm(diff) - 0.5) < 1e-12);

  RandomSource rng(8, 8);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng.next_u64() % 12);
    const int cols = 1 + static_cast<int>(rng.next_u64() % 12);
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.complex_normal();
    const double s = spectral_norm(m);
    const Eigen::JacobiSVD<CMatrix> svd(m);
    CHECK(std::abs(s - svd.singularValues()(0)) <= 1e-10 * svd.singularValues()(0));
    CHECK(std::abs(spectral_norm(m.adjoint()) - s) <= 1e-10 * s);
    const complex c = rng.complex_normal() * 3.0;
    CHECK(std::abs(spectral_norm(c * m) - std::abs(c) * s) <= 1e-10 * std::abs(c) * s);
    CHECK(std::abs(spectral_norm(random_unitary(rows, rng)) - 1.0) < 1e-10);
  }
}

TEST_CASE("kron and validation helpers") {
  CMatrix a(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  const CMatrix k = kron(a, CMatrix::Identity(2, 2));
  CHECK(k(0, 0) == 1.0);
  CHECK(k(1, 1) == 1.0);
  CHECK(k(0, 2) == 2.0);
  CHECK(k(3, 1) == 3.0);
  CHECK(k(2, 3) == 0.0);
  const CVector v = kron(CVector(basis(2, 1)), CVector(basis(3, 2)));
  CHECK(v.size() == 6);
  CHECK(v[5] == 1.0);
  CHECK_THROWS_AS(require_unit_vector(2.0 * basis(2, 0), "v"), InputError);
  CHECK_THROWS_AS(require_unitary(CMatrix::Ones(2, 2), "u"), InputError);
}
