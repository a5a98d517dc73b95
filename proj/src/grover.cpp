#include "cpcq/grover.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cpcq/linalg.hpp"

namespace cpcq::grover {

namespace {

void require_simulated_bits(int n_bits, const char* what) {
  if (n_bits < 1 || n_bits > kMaxSimulatedBits) {
    throw InputError(std::string(what) + ": n_bits " + std::to_string(n_bits) +
                     " outside [1, " + std::to_string(kMaxSimulatedBits) + "]");
  }
}

void require_positive_bits(int n_bits, const char* what) {
  if (n_bits < 1) throw InputError(std::string(what) + ": n_bits must be at least 1");
}

}  // namespace

SearchInstance::SearchInstance(int n, std::uint64_t t) : n_bits(n), target(t) {
  require_simulated_bits(n, "search instance");
  if (target >= size()) {
    throw InputError("search instance: target " + std::to_string(target) + " outside [0, " +
                     std::to_string(size()) + ")");
  }
}

double inverse_sqrt_size(int n_bits) {
  require_positive_bits(n_bits, "inverse_sqrt_size");
  return n_bits % 2 == 0 ? std::ldexp(1.0, -n_bits / 2)
                         : std::ldexp(std::numbers::sqrt2 / 2.0, -(n_bits - 1) / 2);
}

StateVector uniform_state(int n_bits) {
  require_simulated_bits(n_bits, "uniform_state");
  const auto n = Eigen::Index{1} << n_bits;
  return StateVector::Constant(n, complex(inverse_sqrt_size(n_bits), 0.0));
}

StateVector perturbed_state(int n_bits) {
  require_simulated_bits(n_bits, "perturbed_state");
  const auto n = Eigen::Index{1} << n_bits;
  StateVector v = StateVector::Constant(n, complex(1.0 / std::sqrt(static_cast<double>(n - 1)), 0.0));
  v[0] = 0.0;
  return v;
}

UnitaryMatrix oracle_unitary(const SearchInstance& inst) {
  const auto n = static_cast<Eigen::Index>(inst.size());
  UnitaryMatrix u = UnitaryMatrix::Identity(n, n);
  u(static_cast<Eigen::Index>(inst.target), static_cast<Eigen::Index>(inst.target)) = -1.0;
  return u;
}

UnitaryMatrix reflection_about(const StateVector& v) {
  require_unit_vector(v, "reflection_about");
  return UnitaryMatrix::Identity(v.size(), v.size()) - 2.0 * v * v.adjoint();
}

namespace {

StateVector search_step(const SearchInstance& inst, const UnitaryMatrix& diffusion, StateVector s) {
  // The oracle is diagonal with a single -1.
  s[static_cast<Eigen::Index>(inst.target)] = -s[static_cast<Eigen::Index>(inst.target)];
  return apply_unitary(diffusion, s);
}

void require_diffusion(const SearchInstance& inst, const UnitaryMatrix& diffusion, int iterations) {
  require_dimension(diffusion, static_cast<Eigen::Index>(inst.size()), "diffusion operator");
  if (iterations < 0) throw InputError("run_search: negative iteration count");
}

}  // namespace

SearchResult run_search(const SearchInstance& inst, const UnitaryMatrix& diffusion,
                        int iterations) {
  require_diffusion(inst, diffusion, iterations);
  StateVector s = uniform_state(inst.n_bits);
  for (int k = 0; k < iterations; ++k) s = search_step(inst, diffusion, std::move(s));
  SearchResult r;
  r.iterations = iterations;
  r.success_probability = std::norm(s[static_cast<Eigen::Index>(inst.target)]);
  r.final_state = std::move(s);
  return r;
}

std::vector<double> success_series(const SearchInstance& inst, const UnitaryMatrix& diffusion,
                                   int iterations) {
  require_diffusion(inst, diffusion, iterations);
  StateVector s = uniform_state(inst.n_bits);
  std::vector<double> out{std::norm(s[static_cast<Eigen::Index>(inst.target)])};
  for (int k = 0; k < iterations; ++k) {
    s = search_step(inst, diffusion, std::move(s));
    out.push_back(std::norm(s[static_cast<Eigen::Index>(inst.target)]));
  }
  return out;
}

int default_iterations(int n_bits) {
  require_positive_bits(n_bits, "default_iterations");
  if (n_bits > 60) throw InputError("default_iterations: n_bits too large to count iterations");
  const double k = std::floor(std::numbers::pi / 4.0 / inverse_sqrt_size(n_bits));
  return k < 1.0 ? 1 : static_cast<int>(k);
}

double perturbation_angle(int n_bits) { return std::asin(inverse_sqrt_size(n_bits)); }

double perturbation_error(int n_bits) { return 2.0 * inverse_sqrt_size(n_bits); }

double involution_residual(int n_bits) {
  const SearchInstance inst(n_bits, 0);
  const StateVector w = perturbed_state(n_bits);
  // Right-multiplying by the oracle negates the target column.
  UnitaryMatrix step = reflection_about(w);
  step.col(0) = -step.col(0);
  // step^2 = step (1 - 2 w w^dagger) U_0, without a dense N^3 product.
  UnitaryMatrix square = step - 2.0 * (step * w) * w.adjoint();
  square.col(0) = -square.col(0);
  const auto n = static_cast<Eigen::Index>(inst.size());
  return spectral_norm(square - UnitaryMatrix::Identity(n, n));
}

double ideal_success_probability(int n_bits, int iterations) {
  const double s = std::sin((2.0 * iterations + 1.0) * std::asin(inverse_sqrt_size(n_bits)));
  return s * s;
}

}  // namespace cpcq::grover
