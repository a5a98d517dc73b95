#include "cpcq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "cpcq/linalg.hpp"

namespace cpcq {

SpectralDecomposition::SpectralDecomposition(std::vector<double> eigenvalues,
                                             std::vector<CMatrix> projectors) {
  if (eigenvalues.empty()) throw InputError("spectral decomposition: no eigenvalues");
  if (eigenvalues.size() != projectors.size()) {
    throw InputError("spectral decomposition: " + std::to_string(eigenvalues.size()) +
                     " eigenvalues but " + std::to_string(projectors.size()) + " projectors");
  }
  const auto dim = projectors.front().rows();
  if (dim < 1 || dim > kMaxDimension) {
    throw InputError("spectral decomposition: unsupported dimension " + std::to_string(dim));
  }
  for (std::size_t j = 0; j < projectors.size(); ++j) {
    require_dimension(projectors[j], dim, "projector " + std::to_string(j));
    if (!std::isfinite(eigenvalues[j]) || !projectors[j].allFinite()) {
      throw InputError("spectral decomposition: non-finite entry in outcome " +
                       std::to_string(j));
    }
  }
  dimension_ = static_cast<int>(dim);

  for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
    auto same = std::find_if(eigenvalues_.begin(), eigenvalues_.end(), [&](double m) {
      return std::abs(m - eigenvalues[j]) < kEigenMergeTol;
    });
    if (same != eigenvalues_.end()) {
      projectors_[static_cast<std::size_t>(same - eigenvalues_.begin())] += projectors[j];
    } else {
      eigenvalues_.push_back(eigenvalues[j]);
      projectors_.push_back(std::move(projectors[j]));
    }
  }

  const CMatrix id = CMatrix::Identity(dim, dim);
  CMatrix total = CMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < projectors_.size(); ++j) {
    const CMatrix& p = projectors_[j];
    const std::string label = "projector for eigenvalue " + std::to_string(eigenvalues_[j]);
    if (max_abs_diff(p, p.adjoint()) > kProjTol) throw InputError(label + " is not hermitian");
    for (std::size_t k = j; k < projectors_.size(); ++k) {
      const CMatrix prod = p * projectors_[k];
      const double r = (k == j) ? max_abs_diff(prod, p) : prod.cwiseAbs().maxCoeff();
      if (r > kProjTol) {
        throw InputError(label + (k == j ? " is not idempotent"
                                         : " is not orthogonal to outcome " + std::to_string(k)));
      }
    }
    total += p;
  }
  if (max_abs_diff(total, id) > kProjTol) {
    throw InputError("spectral decomposition: projectors do not sum to the identity");
  }
}

SpectralDecomposition SpectralDecomposition::from_hermitian(const CMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw InputError("from_hermitian: matrix must be square and non-empty");
  }
  if (max_abs_diff(h, h.adjoint()) > kProjTol) throw InputError("from_hermitian: not hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  std::vector<double> m;
  std::vector<CMatrix> p;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    const CMatrix proj = vecs.col(i) * vecs.col(i).adjoint();
    if (!m.empty() && std::abs(vals[i] - m.back()) < kEigenMergeTol) {
      p.back() += proj;
    } else {
      m.push_back(vals[i]);
      p.push_back(proj);
    }
  }
  return SpectralDecomposition(std::move(m), std::move(p));
}

SpectralDecomposition SpectralDecomposition::computational_basis(int dim) {
  std::vector<double> m;
  std::vector<CMatrix> p;
  for (int k = 0; k < dim; ++k) {
    m.push_back(k);
    CMatrix e = CMatrix::Zero(dim, dim);
    e(k, k) = 1.0;
    p.push_back(std::move(e));
  }
  return SpectralDecomposition(std::move(m), std::move(p));
}

CMatrix SpectralDecomposition::observable() const {
  CMatrix out = CMatrix::Zero(dimension_, dimension_);
  for (std::size_t j = 0; j < projectors_.size(); ++j) out += eigenvalues_[j] * projectors_[j];
  return out;
}

std::vector<std::size_t> SpectralDecomposition::ascending_order() const {
  std::vector<std::size_t> idx(eigenvalues_.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return eigenvalues_[a] < eigenvalues_[b]; });
  return idx;
}

SpectralDecomposition SpectralDecomposition::conjugated(const UnitaryMatrix& q) const {
  require_dimension(q, dimension_, "conjugating unitary");
  std::vector<CMatrix> p;
  p.reserve(projectors_.size());
  for (const auto& mj : projectors_) p.push_back(q * mj * q.adjoint());
  return SpectralDecomposition(eigenvalues_, std::move(p));
}

bool operator==(const SpectralDecomposition& a, const SpectralDecomposition& b) {
  if (a.eigenvalues_ != b.eigenvalues_) return false;
  for (std::size_t j = 0; j < a.projectors_.size(); ++j) {
    if (a.projectors_[j].rows() != b.projectors_[j].rows() ||
        a.projectors_[j] != b.projectors_[j]) {
      return false;
    }
  }
  return true;
}

SpectralDecomposition random_spectral_decomposition(int dim, int outcomes, RandomSource& rng) {
  if (outcomes < 1 || outcomes > dim) {
    throw InputError("random_spectral_decomposition: need 1 <= outcomes <= dim");
  }
  const UnitaryMatrix basis = random_unitary(dim, rng);
  // Every outcome gets one basis vector, the rest are dealt out at random.
  std::vector<int> owner(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    owner[static_cast<std::size_t>(i)] =
        i < outcomes ? i : static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(outcomes));
  }
  std::vector<double> m;
  std::vector<CMatrix> p(static_cast<std::size_t>(outcomes), CMatrix::Zero(dim, dim));
  for (int j = 0; j < outcomes; ++j) m.push_back(j);
  for (int i = 0; i < dim; ++i) {
    p[static_cast<std::size_t>(owner[static_cast<std::size_t>(i)])] +=
        basis.col(i) * basis.col(i).adjoint();
  }
  return SpectralDecomposition(std::move(m), std::move(p));
}

}  // namespace cpcq
