#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "cpcq/grover.hpp"
#include "cpcq/statistics.hpp"
#include "support.hpp"

using namespace cpcq;
using cpcq::test::basis;
using cpcq::test::cmd;
using std::numbers::pi;

TEST_CASE("wootters_distance") {
  CHECK(wootters_distance({0.3, 0.7}, {0.3, 0.7}) == 0.0);
  CHECK(wootters_distance({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(wootters_distance({0.5, 0.5}, {1.0, 0.0}) == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK_THROWS_AS(wootters_distance({0.5, 0.5}, {1.0, 0.0, 0.0}), InputError);
  CHECK_THROWS_AS(wootters_distance({0.5, 0.6}, {0.5, 0.5}), InputError);

  RandomSource rng(100, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    const int dim = 1 + static_cast<int>(rng.next_u64() % 16);
    const auto p = random_distribution(dim, rng);
    const auto q = random_distribution(dim, rng);
    const auto r = random_distribution(dim, rng);
    const double pq = wootters_distance(p, q);
    CHECK(pq >= 0.0);
    CHECK(pq <= pi / 2);
    CHECK(pq == wootters_distance(q, p));
    CHECK(wootters_distance(p, q) <= wootters_distance(p, r) + wootters_distance(r, q) + 1e-12);
    // Same angle as the arccos definition, away from arccos's ill-conditioned end.
    if (pq > 1e-4) CHECK(std::abs(pq - test::ref_bhattacharyya_angle(p, q)) < 1e-9);
  }
}

TEST_CASE("distinguishable") {
  CHECK(distinguishable(1, 2.0));
  CHECK_FALSE(distinguishable(100, 0.1));
  CHECK(distinguishable(101, 0.1));
  CHECK_FALSE(distinguishable(1000000, 0.0));
}

TEST_CASE("min_sample_size") {
  CHECK(min_sample_size(1.0) == 1);
  CHECK(min_sample_size(grover::perturbation_error(10)) == 256);
  CHECK(min_sample_size(0.1) == 100);
  CHECK(min_sample_size(0.5) == 4);
  CHECK(min_sample_size(0.3) == 12);
  CHECK(min_sample_size(pi / 2) == 1);
  CHECK_THROWS_AS(min_sample_size(0.0), InputError);
  CHECK_THROWS_AS(min_sample_size(-0.1), InputError);
  CHECK_THROWS_AS(min_sample_size(2.0), InputError);

  // ceil(eps^-2) checked by exact rational comparison: k - 1 < eps^-2 <= k.
  RandomSource rng(5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    const double eps = std::ldexp(0.5 + 0.5 * rng.uniform(), -static_cast<int>(rng.next_u64() % 40));
    const BigInt k = min_sample_size(eps);
    int e = 0;
    const double m = std::frexp(eps, &e);
    const BigInt mant(static_cast<long long>(std::ldexp(m, 53)));  // eps = mant 2^(e-53)
    const BigRational eps_exact = e >= 53 ? BigRational(mant << (e - 53))
                                          : BigRational(mant, BigInt(1) << (53 - e));
    const BigRational inv_sq = 1 / (eps_exact * eps_exact);
    CHECK(BigRational(k) >= inv_sq);
    CHECK(BigRational(k - 1) < inv_sq);
  }
}

TEST_CASE("verification_cost") {
  CHECK(verification_cost(2).total_lower_bound == 4);
  const auto c10 = verification_cost(10);
  CHECK(c10.per_vector_samples == 256);
  CHECK(c10.n_vectors == 1024);
  CHECK(c10.total_lower_bound == 262144);
  CHECK(verification_cost(50).total_lower_bound == BigInt(1) << 98);
  CHECK(verification_cost(1).per_vector_samples == 1);
  for (int n = 1; n <= 120; ++n) {
    BigInt four_pow = 1;
    for (int i = 0; i < n - 1; ++i) four_pow *= 4;
    CHECK(verification_cost(n).total_lower_bound == four_pow);
  }
  CHECK_THROWS_AS(verification_cost(0), InputError);
}

namespace {

Model qubit_model(const std::map<std::string, StateVector>& states, std::string name) {
  ModelData d;
  d.name = std::move(name);
  d.dimension = 2;
  for (const auto& [b, v] : states) {
    d.commands.push_back(cmd(b));
    d.states.emplace(cmd(b), v);
    d.unitaries.emplace(cmd(b), CMatrix::Identity(2, 2));
    d.observables.emplace(cmd(b), test::z_measurement());
  }
  return Model(std::move(d));
}

}  // namespace

TEST_CASE("weighted distances") {
  const StateVector plus = (basis(2, 0) + basis(2, 1)) / std::sqrt(2.0);
  const auto alpha = qubit_model({{"0", basis(2, 0)}, {"1", basis(2, 1)}}, "alpha");
  const auto beta = qubit_model({{"0", plus}, {"1", basis(2, 1)}}, "beta");

  const auto both = WeightedCommandSet({{cmd("0"), 0.5}, {cmd("1"), 0.5}});
  CHECK(weighted_model_distance(alpha, alpha, both) == 0.0);
  CHECK(weighted_model_distance(alpha, beta, both) == doctest::Approx(pi / 8).epsilon(1e-15));
  const auto one = WeightedCommandSet({{cmd("0"), 1.0}});
  CHECK(weighted_model_distance(alpha, beta, one) == command_distance(alpha, beta, cmd("0")));

  SUBCASE("against data") {
    // z_measurement has eigenvalues {+1, -1}; data index 0 is the smaller one (-1, i.e. |1>).
    RelativeFrequencies data;
    data[cmd("0")] = {0.0, 1.0};
    data[cmd("1")] = {1.0, 0.0};
    CHECK(weighted_model_distance(alpha, data, both) == 0.0);
    CHECK(command_distance(beta, data[cmd("0")], cmd("0")) ==
          doctest::Approx(pi / 4).epsilon(1e-15));
  }
  SUBCASE("missing command or spectrum mismatch") {
    const auto other = WeightedCommandSet({{cmd("11"), 1.0}});
    CHECK_THROWS_AS(weighted_model_distance(alpha, beta, other), InputError);
    ModelData d = beta.data();
    d.observables.erase(cmd("0"));
    d.observables.emplace(cmd("0"), SpectralDecomposition::computational_basis(2));
    CHECK_THROWS_AS(command_distance(alpha, Model(d), cmd("0")), InputError);
  }
  SUBCASE("weights must sum to one") {
    CHECK_THROWS_AS(WeightedCommandSet({{cmd("0"), 0.4}, {cmd("1"), 0.4}}), InputError);
    CHECK_THROWS_AS(WeightedCommandSet({{cmd("0"), -0.5}, {cmd("1"), 1.5}}), InputError);
  }
}

TEST_CASE("state_distance_bound") {
  RandomSource rng(6, 0);
  const auto v = random_state(4, rng);
  CHECK(state_distance_bound(v, v) < 1e-15);
  CHECK(state_distance_bound(v, complex(0, 1) * v) < 1e-15);
  CHECK(state_distance_bound(basis(3, 0), basis(3, 2)) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(state_distance_bound(grover::uniform_state(4), grover::perturbed_state(4)) ==
        doctest::Approx(std::acos(std::sqrt(15.0 / 16.0))).epsilon(1e-14));
  CHECK_THROWS_AS(state_distance_bound(basis(2, 0), basis(3, 0)), InputError);

  // Induced distributions are never further apart than the states.
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 2 + trial % 7;
    const auto a = random_state(dim, rng);
    const auto b = random_state(dim, rng);
    const auto obs = random_spectral_decomposition(dim, 2 + trial % (dim - 1), rng);
    const auto pa = test::ref_probabilities(a, CMatrix::Identity(dim, dim), obs.projectors());
    const auto pb = test::ref_probabilities(b, CMatrix::Identity(dim, dim), obs.projectors());
    CHECK(wootters_distance(pa, pb) <= state_distance_bound(a, b) + 1e-10);
  }
}

namespace {

void check_perfect_fit(const std::vector<double>& f) {
  const auto [a, b] = orthogonal_perfect_fit(f);
  double total = 0.0;
  for (double x : f) total += x;
  for (const Model* m : {&a, &b}) {
    const auto r = m->resolve(cmd("0"));
    CHECK(r.unitary == CMatrix::Identity(m->dimension(), m->dimension()));
    const auto p = test::ref_probabilities(r.state, r.unitary, r.observable->projectors());
    REQUIRE(p.size() == f.size());
    for (std::size_t j = 0; j < f.size(); ++j) CHECK(std::abs(p[j] - f[j] / total) < 1e-12);
  }
  CHECK(test::ref_overlap(a.resolve(cmd("0")).state, b.resolve(cmd("0")).state) < 1e-10);
}

}  // namespace

TEST_CASE("orthogonal_perfect_fit") {
  SUBCASE("two equal outcomes") {
    const auto [a, b] = orthogonal_perfect_fit(std::vector<double>{0.5, 0.5});
    const auto va = a.resolve(cmd("0")).state;
    const auto vb = b.resolve(cmd("0")).state;
    CHECK(std::abs(va[0] - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(va[1] - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(vb[0] - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(vb[1] + std::sqrt(0.5)) < 1e-15);
  }
  SUBCASE("degenerate vectors") {
    CHECK_THROWS_WITH_AS(orthogonal_perfect_fit(std::vector<double>{1.0, 0.0}), doctest::Contains("degenerate"),
                         InputError);
    CHECK_THROWS_AS(orthogonal_perfect_fit(std::vector<double>{0.0, 0.0, 1.0}), InputError);
    CHECK_THROWS_AS(orthogonal_perfect_fit(std::vector<double>{0.5, -0.5, 1.0}), InputError);
  }
  SUBCASE("fixed examples") {
    check_perfect_fit({0.2, 0.3, 0.5});
    check_perfect_fit({0.9, 0.1});
    check_perfect_fit({0.6, 0.2, 0.2});
    check_perfect_fit({0.25, 0.25, 0.25, 0.25});
    check_perfect_fit({0.5, 0.25, 0.25});
    check_perfect_fit({0.0, 0.7, 0.0, 0.3});
    check_perfect_fit({1e-9, 1.0 - 1e-9});
  }
  SUBCASE("seeded random vectors") {
    RandomSource rng(1234, 0);
    for (int trial = 0; trial < 300; ++trial) {
      const int dim = 2 + trial % 7;
      auto f = random_distribution(dim, rng);
      if (trial % 3 == 0) f[rng.next_u64() % dim] = 0.0;
      if (trial % 5 == 0) f[0] += 3.0;  // one dominant outcome
      int positive = 0;
      double total = 0.0;
      for (double x : f) {
        positive += x > 0.0;
        total += x;
      }
      for (double& x : f) x /= total;
      if (positive >= 2) check_perfect_fit(f);
    }
  }
  SUBCASE("several commands") {
    RelativeFrequencies data;
    data[cmd("0")] = {0.1, 0.9};
    data[cmd("11")] = {0.5, 0.5};
    const auto [a, b] = orthogonal_perfect_fit(data);
    for (const auto& [c, f] : data) {
      CHECK(command_distance(a, f, c) < 1e-12);
      CHECK(command_distance(b, f, c) < 1e-12);
      CHECK(test::ref_overlap(a.resolve(c).state, b.resolve(c).state) < 1e-10);
    }
  }
}
