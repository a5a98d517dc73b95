#include "cpcq/precision_grid.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace cpcq::grid {

GridRatio GridRatio::sqrt2_power(int half_powers) {
  if (half_powers < 1) throw InputError("grid ratio: need at least one half power of 2");
  GridRatio r;
  r.half_powers_ = half_powers;
  r.value_ = half_powers % 2 == 0 ? std::ldexp(1.0, half_powers / 2)
                                  : std::ldexp(std::numbers::sqrt2, (half_powers - 1) / 2);
  return r;
}

GridRatio GridRatio::from_value(double ratio) {
  if (!std::isfinite(ratio) || ratio <= 1.0) {
    throw InputError("grid ratio eps/eps' must exceed 1 (no improvement otherwise)");
  }
  const double halves = 2.0 * std::log2(ratio);
  const double k = std::round(halves);
  if (k >= 1.0 && k < 1e6 && std::abs(halves - k) <= 1e-12 * std::max(1.0, k)) {
    return sqrt2_power(static_cast<int>(k));
  }
  GridRatio r;
  r.value_ = ratio;
  return r;
}

GridRatio GridRatio::parse(std::string_view text) {
  if (text == "sqrt2") return sqrt2_power(1);
  if (text.starts_with("sqrt2^")) {
    const auto digits = text.substr(6);
    int k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw InputError("grid ratio \"" + std::string(text) + "\": bad exponent");
    }
    return sqrt2_power(k);
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("grid ratio \"" + std::string(text) + "\" is not sqrt2, sqrt2^K or a number");
  }
  return from_value(v);
}

double GridRatio::value() const { return value_; }

double GridRatio::log2() const {
  return half_powers_ ? 0.5 * *half_powers_ : std::log2(value_);
}

namespace {

void check_query(int n_bits, double eps, int n_gates) {
  if (n_bits < 1) throw InputError("grid query: n_bits must be at least 1");
  if (!std::isfinite(eps) || eps <= 0.0) throw InputError("grid query: eps must be positive");
  if (n_gates < 1) throw InputError("grid query: need at least one gate command");
}

GridRatio ratio_of(double eps, double eps_prime) {
  if (!std::isfinite(eps_prime) || eps_prime <= 0.0) {
    throw InputError("grid query: eps' must be positive");
  }
  if (eps_prime >= eps) throw InputError("grid query: eps' must be smaller than eps");
  return GridRatio::from_value(eps / eps_prime);
}

}  // namespace

GridQuery::GridQuery(int n, double e, double e_prime, int gates)
    : n_bits(n), eps(e), eps_prime(e_prime), ratio(ratio_of(e, e_prime)), n_gates(gates) {
  check_query(n, e, gates);
}

GridQuery::GridQuery(int n, double e, GridRatio r, int gates)
    : n_bits(n), eps(e), eps_prime(e / r.value()), ratio(r), n_gates(gates) {
  check_query(n, e, gates);
}

BigInt su_dimension(int n_bits) {
  if (n_bits < 1) throw InputError("su_dimension: n_bits must be at least 1");
  return (BigInt(1) << (2 * n_bits)) - 1;
}

double log2_of(const BigInt& x) {
  if (x <= 0) throw InputError("log2_of: argument must be positive");
  const auto msb = static_cast<long>(boost::multiprecision::msb(x));
  if (msb < 1000) return std::log2(x.convert_to<double>());
  const BigInt top = x >> (msb - 60);
  return static_cast<double>(msb - 60) + std::log2(top.convert_to<double>());
}

GridBound grid_point_lower_bound(const GridQuery& q) {
  GridBound g;
  g.d = su_dimension(q.n_bits);
  if (const auto k = q.ratio.half_powers()) {
    g.log2_exact = BigRational(g.d * *k, 2);
    g.log2_points = g.log2_exact->convert_to<double>();
    const auto& exact = *g.log2_exact;
    if (boost::multiprecision::denominator(exact) == 1 &&
        boost::multiprecision::numerator(exact) <= 4096) {
      g.points = BigInt(1) << boost::multiprecision::numerator(exact).convert_to<unsigned>();
    }
  } else {
    g.log2_points = g.d.convert_to<double>() * q.ratio.log2();
  }
  g.decimal_order = g.log2_points * std::log10(2.0);
  return g;
}

BlindSearchReport blind_search_verdict(const GridQuery& q, const BigInt& trials_per_command,
                                       double budget_log2) {
  if (trials_per_command < 1) throw InputError("blind_search_verdict: need at least one trial");
  BlindSearchReport r;
  r.grid = grid_point_lower_bound(q);
  r.log2_gates = std::log2(static_cast<double>(q.n_gates));
  r.log2_trials = log2_of(trials_per_command);
  r.log2_total = r.grid.log2_points + r.log2_trials + r.log2_gates;
  r.budget_log2 = budget_log2;
  r.hopeless = r.log2_total > budget_log2;
  return r;
}

}  // namespace cpcq::grid
