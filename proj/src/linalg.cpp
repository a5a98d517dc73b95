#include "cpcq/linalg.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "cpcq/random.hpp"

namespace cpcq {

namespace {

constexpr double kPowerIterationTol = 1e-12;

std::string dims(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

StateVector apply_unitary(const UnitaryMatrix& u, const StateVector& s) {
  if (u.cols() != s.size() || u.rows() != u.cols()) {
    throw InputError("apply_unitary: matrix " + dims(u.rows(), u.cols()) +
                     " does not act on a vector of length " + std::to_string(s.size()));
  }
  return u * s;
}

double spectral_norm(const CMatrix& m) {
  PowerIterationInfo info;
  return spectral_norm(m, info);
}

double spectral_norm(const CMatrix& m, PowerIterationInfo& info) {
  info = {};
  if (!m.allFinite()) throw InputError("spectral_norm: matrix has non-finite entries");
  if (m.size() == 0) return 0.0;

  // Fixed start so the result is reproducible.
  RandomSource rng(0x5eedULL, 0);
  CVector x(m.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.complex_normal();
  x.normalize();

  for (int it = 1; it <= kSpectralNormMaxIterations; ++it) {
    const CVector y = m.adjoint() * (m * x);
    const double lambda = x.dot(y).real();  // Rayleigh quotient of m^dagger m
    const double ynorm = y.norm();
    info.iterations = it;
    if (ynorm == 0.0) {
      // x lies in the null space. Only the zero matrix should get here.
      if (m.cwiseAbs().maxCoeff() == 0.0) {
        info.converged = true;
        return 0.0;
      }
      break;
    }
    const double residual = (y - lambda * x).norm();
    if (residual <= kPowerIterationTol * lambda) {
      info.converged = true;
      return std::sqrt(lambda);
    }
    x = y / ynorm;
  }

  info.used_svd_fallback = true;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double unitarity_residual(const CMatrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  const CMatrix g = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
  return g.size() == 0 ? 0.0 : g.cwiseAbs().maxCoeff();
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("max_abs_diff: shapes " + dims(a.rows(), a.cols()) + " and " +
                     dims(b.rows(), b.cols()) + " differ");
  }
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

void require_unit_vector(const CVector& v, std::string_view what) {
  if (!v.allFinite()) throw InputError(std::string(what) + ": non-finite amplitude");
  const double n = v.norm();
  if (std::abs(n - 1.0) > kUnitTol) {
    throw InputError(std::string(what) + ": vector norm " + std::to_string(n) +
                     " differs from 1 by more than 1e-10");
  }
}

void require_unitary(const CMatrix& u, std::string_view what) {
  if (u.rows() != u.cols()) {
    throw InputError(std::string(what) + ": matrix is " + dims(u.rows(), u.cols()) +
                     ", not square");
  }
  if (!u.allFinite()) throw InputError(std::string(what) + ": non-finite entry");
  const double r = unitarity_residual(u);
  if (r > kUnitTol) {
    throw InputError(std::string(what) + ": not unitary (max |U^dagger U - 1| = " +
                     std::to_string(r) + ")");
  }
}

void require_dimension(const CVector& v, Eigen::Index dim, std::string_view what) {
  if (v.size() != dim) {
    throw InputError(std::string(what) + ": length " + std::to_string(v.size()) +
                     ", expected " + std::to_string(dim));
  }
}

void require_dimension(const CMatrix& m, Eigen::Index dim, std::string_view what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw InputError(std::string(what) + ": matrix is " + dims(m.rows(), m.cols()) +
                     ", expected " + dims(dim, dim));
  }
}

}  // namespace cpcq
