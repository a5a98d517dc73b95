#include "cpcq/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace cpcq {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

double RandomSource::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomSource::normal() {
  // 1 - u is in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

complex RandomSource::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

UnitaryMatrix random_unitary(int dim, RandomSource& rng) {
  CMatrix z(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) z(r, c) = rng.complex_normal();
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (int c = 0; c < dim; ++c) {
    const complex d = rmat(c, c);
    const double a = std::abs(d);
    if (a > 0.0) q.col(c) *= d / a;
  }
  return q;
}

StateVector random_state(int dim, RandomSource& rng) {
  StateVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.complex_normal();
  v.normalize();
  return v;
}

std::vector<double> random_distribution(int dim, RandomSource& rng) {
  std::vector<double> p(static_cast<std::size_t>(dim));
  double total = 0.0;
  for (auto& x : p) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace cpcq
