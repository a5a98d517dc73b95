#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace cpcq {

using complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Unit-norm amplitude vector. The invariant is checked where one is accepted
/// (see require_unit_vector) rather than carried in the type.
using StateVector = CVector;
/// Square complex matrix with U^dagger U = 1 within kUnitTol.
using UnitaryMatrix = CMatrix;

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Tolerances shared by every module.
inline constexpr double kUnitTol = 1e-10;       // unitarity, orthonormality, unit norm
inline constexpr double kProjTol = 1e-10;       // projector algebra
inline constexpr double kProbTol = 1e-9;        // probability sums
inline constexpr double kEigenMergeTol = 1e-8;  // eigenvalues this close share an eigenspace

inline constexpr int kMaxDimension = 4096;
inline constexpr int kMaxSimulatedBits = 12;

/// Malformed or inconsistent caller input. The CLI maps this to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed result broke one of its own invariants (exit status 1).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cpcq
