#pragma once

// Fixtures and independent reference computations shared by the test suites.
// The reference routines use explicit loops over entries, never Eigen
// products, so they do not share code paths with the library.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "cpcq/command.hpp"
#include "cpcq/common.hpp"
#include "cpcq/model.hpp"
#include "cpcq/random.hpp"
#include "cpcq/spectral.hpp"

namespace cpcq::test {

inline Command cmd(const std::string& bits) { return Command::parse(bits); }

inline StateVector basis(int dim, int k) {
  StateVector v = StateVector::Zero(dim);
  v[k] = 1.0;
  return v;
}

inline UnitaryMatrix not_gate() {
  UnitaryMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

/// exp(-i a Y / 2): a real rotation by a in the x-z plane.
inline UnitaryMatrix y_rotation(double a) {
  UnitaryMatrix r(2, 2);
  r << std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2);
  return r;
}

inline SpectralDecomposition z_measurement() {
  return SpectralDecomposition({1.0, -1.0}, {basis(2, 0) * basis(2, 0).adjoint(),
                                             basis(2, 1) * basis(2, 1).adjoint()});
}

/// A model assigning (v, U, M) to a single command.
inline Model single_command_model(const Command& b, const StateVector& v, const UnitaryMatrix& u,
                                  const SpectralDecomposition& m, std::string name = "single") {
  ModelData d;
  d.name = std::move(name);
  d.dimension = static_cast<int>(v.size());
  d.commands = {b};
  d.states.emplace(b, v);
  d.unitaries.emplace(b, u);
  d.observables.emplace(b, m);
  return Model(std::move(d));
}

/// sum_k u_ik s_k by explicit accumulation.
inline std::vector<complex> ref_apply(const CMatrix& u, const CVector& s) {
  std::vector<complex> out(static_cast<std::size_t>(u.rows()));
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    complex acc = 0.0;
    for (Eigen::Index k = 0; k < u.cols(); ++k) acc += u(i, k) * s[k];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

/// <v| U^dagger M_j U |v> for every j, entry by entry.
inline std::vector<double> ref_probabilities(const StateVector& v, const UnitaryMatrix& u,
                                             const std::vector<CMatrix>& projectors) {
  const auto uv = ref_apply(u, v);
  std::vector<double> out;
  for (const auto& p : projectors) {
    complex acc = 0.0;
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      for (Eigen::Index k = 0; k < p.cols(); ++k) {
        acc += std::conj(uv[static_cast<std::size_t>(i)]) * p(i, k) * uv[static_cast<std::size_t>(k)];
      }
    }
    out.push_back(acc.real());
  }
  return out;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// |<a|b>| by explicit accumulation.
inline double ref_overlap(const CVector& a, const CVector& b) {
  complex acc = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return std::abs(acc);
}

/// arccos(sum sqrt(p q)), clamped, straight from the definition.
inline double ref_bhattacharyya_angle(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) s += std::sqrt(p[j] * q[j]);
  return std::acos(std::min(1.0, s));
}

inline std::vector<Command> commands_of_length(int len) {
  std::vector<Command> out;
  for (int x = 0; x < (1 << len); ++x) {
    std::string s;
    for (int i = len - 1; i >= 0; --i) s += ((x >> i) & 1) ? '1' : '0';
    out.push_back(cmd(s));
  }
  return out;
}

/// Distinct random non-empty commands of length <= 4.
inline std::vector<Command> random_commands(int count, RandomSource& rng) {
  std::vector<Command> out;
  while (static_cast<int>(out.size()) < count) {
    const int len = 1 + static_cast<int>(rng.next_u64() % 4);
    std::string s;
    for (int i = 0; i < len; ++i) s += (rng.next_u64() & 1) ? '1' : '0';
    const Command c = cmd(s);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

}  // namespace cpcq::test
