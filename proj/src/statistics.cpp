#include "cpcq/statistics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cpcq/linalg.hpp"

namespace cpcq {

double wootters_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) {
    throw InputError("wootters_distance: lengths " + std::to_string(p.size()) + " and " +
                     std::to_string(q.size()) + " differ");
  }
  require_distribution(p, "wootters_distance (first)");
  require_distribution(q, "wootters_distance (second)");
  double chord2 = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double diff = std::sqrt(std::max(p[j], 0.0)) - std::sqrt(std::max(q[j], 0.0));
    chord2 += diff * diff;
  }
  const double half_chord = std::min(0.5 * std::sqrt(chord2), std::numbers::sqrt2 / 2.0);
  return std::min(2.0 * std::asin(half_chord), std::numbers::pi / 2.0);
}

bool distinguishable(std::uint64_t n_trials, double d) {
  if (!(d >= 0.0)) throw InputError("distinguishable: distance must be non-negative");
  return std::sqrt(static_cast<double>(n_trials)) * d > 1.0;
}

BigInt min_sample_size(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw InputError("min_sample_size: epsilon must be positive");
  }
  if (epsilon > std::numbers::pi / 2.0) {
    throw InputError("min_sample_size: epsilon exceeds pi/2, the largest statistical distance");
  }
  // epsilon = mantissa * 2^(exp - 53) exactly, so eps^-2 = 2^(2(53 - exp)) / mantissa^2.
  int exp = 0;
  const double frac = std::frexp(epsilon, &exp);
  const auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));
  const int shift = 2 * (53 - exp);  // >= 104 since epsilon < 2
  BigInt num = BigInt(1) << shift;
  BigInt den = BigInt(mantissa) * mantissa;
  return (num + den - 1) / den;
}

VerificationCost verification_cost(int n_bits) {
  if (n_bits < 1) throw InputError("verification_cost: n_bits must be at least 1");
  VerificationCost c;
  c.n_bits = n_bits;
  c.per_vector_samples = n_bits >= 2 ? BigInt(1) << (n_bits - 2) : BigInt(1);
  c.n_vectors = BigInt(1) << n_bits;
  c.total_lower_bound = BigInt(1) << (2 * n_bits - 2);
  return c;
}

namespace {

std::string quoted(const Command& b) { return "\"" + b.bits() + "\""; }

// Probabilities of `d` rearranged into ascending eigenvalue order.
std::vector<double> ascending(const OutcomeDistribution& d, const SpectralDecomposition& m) {
  std::vector<double> out;
  for (auto j : m.ascending_order()) out.push_back(d.probs[j]);
  return out;
}

}  // namespace

double command_distance(const Model& alpha, const Model& beta, const Command& b) {
  const auto ra = alpha.resolve(b);
  const auto rb = beta.resolve(b);
  const auto& ma = *ra.observable;
  const auto& mb = *rb.observable;
  if (ma.outcome_count() != mb.outcome_count()) {
    throw InputError("spectrum mismatch at " + quoted(b) + ": " +
                     std::to_string(ma.outcome_count()) + " vs " +
                     std::to_string(mb.outcome_count()) + " outcomes");
  }
  const auto oa = ma.ascending_order();
  const auto ob = mb.ascending_order();
  for (std::size_t k = 0; k < oa.size(); ++k) {
    if (std::abs(ma.eigenvalues()[oa[k]] - mb.eigenvalues()[ob[k]]) > kEigenMergeTol) {
      throw InputError("spectrum mismatch at " + quoted(b) + ": eigenvalue " +
                       std::to_string(ma.eigenvalues()[oa[k]]) + " vs " +
                       std::to_string(mb.eigenvalues()[ob[k]]));
    }
  }
  return wootters_distance(ascending(outcome_probabilities(alpha, b), ma),
                           ascending(outcome_probabilities(beta, b), mb));
}

double command_distance(const Model& alpha, const std::vector<double>& freqs, const Command& b) {
  const auto ra = alpha.resolve(b);
  if (freqs.size() != ra.observable->outcome_count()) {
    throw InputError("spectrum mismatch at " + quoted(b) + ": data has " +
                     std::to_string(freqs.size()) + " outcomes, model has " +
                     std::to_string(ra.observable->outcome_count()));
  }
  return wootters_distance(ascending(outcome_probabilities(alpha, b), *ra.observable), freqs);
}

double weighted_model_distance(const Model& alpha, const Model& beta,
                               const WeightedCommandSet& w) {
  double total = 0.0;
  for (const auto& [b, weight] : w.entries()) total += weight * command_distance(alpha, beta, b);
  return total;
}

double weighted_model_distance(const Model& alpha, const RelativeFrequencies& data,
                               const WeightedCommandSet& w) {
  double total = 0.0;
  for (const auto& [b, weight] : w.entries()) {
    auto it = data.find(b);
    if (it == data.end()) throw InputError("no data for command " + quoted(b));
    total += weight * command_distance(alpha, it->second, b);
  }
  return total;
}

double state_distance_bound(const StateVector& a, const StateVector& b) {
  require_dimension(b, a.size(), "state_distance_bound");
  require_unit_vector(a, "state_distance_bound (first)");
  require_unit_vector(b, "state_distance_bound (second)");
  const complex overlap = a.dot(b);
  const double perp = (b - overlap * a).norm();
  return std::atan2(perp, std::abs(overlap));
}

namespace {

// Angle opposite side c in a triangle with sides a, b, c, accurate for
// needle-like triangles (Kahan's formula).
double angle_opposite(double c, double a, double b) {
  if (a < b) std::swap(a, b);
  const double mu = (b >= c) ? c - (a - b) : b - (a - c);
  const double num = ((a - b) + c) * mu;
  const double den = (a + (b + c)) * ((a - c) + b);
  if (num <= 0.0) return 0.0;
  if (den <= 0.0) return std::numbers::pi;
  return 2.0 * std::atan(std::sqrt(num / den));
}

struct FitStates {
  CVector alpha;
  CVector beta;
  SpectralDecomposition measurement;
};

FitStates fit_one(const std::vector<double>& f, int dim) {
  const auto k = static_cast<int>(f.size());
  const auto star = static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin());

  CVector alpha = CVector::Zero(dim);
  CVector beta = CVector::Zero(dim);
  for (int j = 0; j < k; ++j) alpha[j] = std::sqrt(f[static_cast<std::size_t>(j)]);

  if (f[static_cast<std::size_t>(star)] > 0.5) {
    // One outcome dominates: tilt beta's share of it into the extra basis
    // vector so that its overlap with alpha cancels the rest.
    double rest = 0.0;
    for (int j = 0; j < k; ++j) {
      if (j != star) rest += f[static_cast<std::size_t>(j)];
    }
    const double fs = f[static_cast<std::size_t>(star)];
    const double c = -rest / fs;
    const double s = std::sqrt((1.0 - c) * (1.0 + c));
    for (int j = 0; j < k; ++j) beta[j] = alpha[j];
    beta[star] = alpha[star] * c;
    beta[k] = alpha[star] * s;
  } else {
    // Deal the support, largest first, into three groups, each time onto the
    // lightest group. All group sums stay <= 1/2, so they form a triangle.
    std::vector<int> order;
    for (int j = 0; j < k; ++j) {
      if (f[static_cast<std::size_t>(j)] > 0.0) order.push_back(j);
    }
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return f[static_cast<std::size_t>(x)] > f[static_cast<std::size_t>(y)];
    });
    std::array<double, 3> sum{0.0, 0.0, 0.0};
    std::vector<int> group(static_cast<std::size_t>(k), -1);
    for (int j : order) {
      const auto g = static_cast<int>(std::min_element(sum.begin(), sum.end()) - sum.begin());
      group[static_cast<std::size_t>(j)] = g;
      sum[static_cast<std::size_t>(g)] += f[static_cast<std::size_t>(j)];
    }
    // Group 0 points along +1, group 1 at pi - t and group 2 at pi + u, with t
    // and u the triangle's angles opposite sides 2 and 1.
    const double t = angle_opposite(sum[2], sum[0], sum[1]);
    const double u = angle_opposite(sum[1], sum[0], sum[2]);
    const std::array<complex, 3> phase{complex(1.0, 0.0), std::polar(1.0, std::numbers::pi - t),
                                       std::polar(1.0, std::numbers::pi + u)};
    for (int j = 0; j < k; ++j) {
      const int g = group[static_cast<std::size_t>(j)];
      beta[j] = g < 0 ? complex(0.0) : alpha[j] * phase[static_cast<std::size_t>(g)];
    }
  }

  std::vector<double> eig;
  std::vector<CMatrix> proj;
  for (int j = 0; j < k; ++j) {
    eig.push_back(j);
    CMatrix p = CMatrix::Zero(dim, dim);
    p(j, j) = 1.0;
    if (dim > k && j == star) p(k, k) = 1.0;
    proj.push_back(std::move(p));
  }
  return {std::move(alpha), std::move(beta), SpectralDecomposition(std::move(eig), std::move(proj))};
}

}  // namespace

std::pair<Model, Model> orthogonal_perfect_fit(const RelativeFrequencies& freqs) {
  if (freqs.empty()) throw InputError("orthogonal_perfect_fit: no frequency vectors");
  const std::size_t k = freqs.begin()->second.size();
  bool extend = false;
  std::map<Command, std::vector<double>> normalized;
  for (const auto& [b, f] : freqs) {
    if (f.size() != k) {
      throw InputError("orthogonal_perfect_fit: command " + quoted(b) + " has " +
                       std::to_string(f.size()) + " outcomes, expected " + std::to_string(k));
    }
    require_distribution(f, "orthogonal_perfect_fit");
    std::vector<double> g(f.size());
    double total = 0.0;
    for (double x : f) total += std::max(x, 0.0);
    for (std::size_t j = 0; j < f.size(); ++j) g[j] = std::max(f[j], 0.0) / total;
    if (std::count_if(g.begin(), g.end(), [](double x) { return x > 0.0; }) < 2) {
      throw InputError("degenerate frequency vector at command " + quoted(b) +
                       ": orthogonal fits need at least two outcomes with positive frequency");
    }
    if (*std::max_element(g.begin(), g.end()) > 0.5) extend = true;
    normalized.emplace(b, std::move(g));
  }
  const int dim = static_cast<int>(k) + (extend ? 1 : 0);

  ModelData a;
  a.dimension = dim;
  ModelData c = a;
  a.name = "orthofit-alpha";
  c.name = "orthofit-beta";
  const CMatrix id = CMatrix::Identity(dim, dim);
  for (const auto& [b, g] : normalized) {
    auto fit = fit_one(g, dim);
    for (auto* m : {&a, &c}) {
      m->commands.push_back(b);
      m->unitaries.emplace(b, id);
      m->observables.emplace(b, fit.measurement);
    }
    a.states.emplace(b, std::move(fit.alpha));
    c.states.emplace(b, std::move(fit.beta));
  }
  return {Model(std::move(a)), Model(std::move(c))};
}

std::pair<Model, Model> orthogonal_perfect_fit(const std::vector<double>& freqs,
                                               const Command& command) {
  return orthogonal_perfect_fit(RelativeFrequencies{{command, freqs}});
}

}  // namespace cpcq
