#pragma once

#include <string_view>

#include "cpcq/common.hpp"

namespace cpcq {

/// u * s. Throws InputError on a dimension mismatch.
StateVector apply_unitary(const UnitaryMatrix& u, const StateVector& s);

/// Largest singular value of m.
///
/// Runs power iteration on m^dagger m from a fixed pseudo-random start vector
/// until the Rayleigh quotient has relative residual below 1e-12 in the
/// eigenvalue. If that does not happen within kSpectralNormMaxIterations
/// steps the result falls back to a Jacobi SVD. Throws InputError if any entry
/// is not finite.
double spectral_norm(const CMatrix& m);

inline constexpr int kSpectralNormMaxIterations = 10000;

/// Statistics from the most recent power iteration, for diagnostics and tests.
struct PowerIterationInfo {
  int iterations = 0;
  bool converged = false;
  bool used_svd_fallback = false;
};
double spectral_norm(const CMatrix& m, PowerIterationInfo& info);

/// max_ij |(u^dagger u - 1)_ij|
double unitarity_residual(const CMatrix& u);

/// max_ij |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Kronecker product a (x) b with index (i * rows(b) + k).
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

// Validators throw InputError naming `what`.
void require_unit_vector(const CVector& v, std::string_view what);
void require_unitary(const CMatrix& u, std::string_view what);
void require_dimension(const CVector& v, Eigen::Index dim, std::string_view what);
void require_dimension(const CMatrix& m, Eigen::Index dim, std::string_view what);

}  // namespace cpcq
