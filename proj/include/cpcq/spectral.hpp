#pragma once

#include <vector>

#include "cpcq/common.hpp"
#include "cpcq/random.hpp"

namespace cpcq {

/// An observable written as sum_j m_j M_j with orthogonal projectors M_j.
///
/// Construction merges eigenvalues closer than kEigenMergeTol (their
/// projectors are summed into the first occurrence) and then checks that the
/// projectors are hermitian, idempotent, mutually orthogonal and complete, all
/// within kProjTol. Outcome order is the order the eigenvalues were given in.
class SpectralDecomposition {
 public:
  SpectralDecomposition(std::vector<double> eigenvalues, std::vector<CMatrix> projectors);

  /// Diagonalizes a hermitian matrix; outcomes come out in ascending eigenvalue order.
  static SpectralDecomposition from_hermitian(const CMatrix& h);

  /// |k><k| with eigenvalue k, for k = 0 .. dim-1.
  static SpectralDecomposition computational_basis(int dim);

  int dimension() const { return dimension_; }
  std::size_t outcome_count() const { return eigenvalues_.size(); }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  const std::vector<CMatrix>& projectors() const { return projectors_; }

  /// sum_j m_j M_j
  CMatrix observable() const;

  /// Outcome indices ordered by ascending eigenvalue.
  std::vector<std::size_t> ascending_order() const;

  /// Q M_j Q^dagger for every j; eigenvalues unchanged.
  SpectralDecomposition conjugated(const UnitaryMatrix& q) const;

  friend bool operator==(const SpectralDecomposition& a, const SpectralDecomposition& b);

 private:
  int dimension_ = 0;
  std::vector<double> eigenvalues_;
  std::vector<CMatrix> projectors_;
};

/// Observable with `outcomes` eigenspaces of random rank, spanned by columns of
/// a Haar unitary, with eigenvalues 0, 1, ..., outcomes-1.
SpectralDecomposition random_spectral_decomposition(int dim, int outcomes, RandomSource& rng);

}  // namespace cpcq
