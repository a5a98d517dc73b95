#pragma once

#include <cstdint>
#include <vector>

#include "cpcq/common.hpp"

namespace cpcq::grover {

/// Search over n-bit arguments for the unique marked index.
struct SearchInstance {
  SearchInstance(int n_bits, std::uint64_t target);

  int n_bits;
  std::uint64_t target;

  std::uint64_t size() const { return std::uint64_t{1} << n_bits; }
};

struct SearchResult {
  int iterations = 0;
  StateVector final_state;
  double success_probability = 0.0;  // |<target|final_state>|^2
};

/// N^(-1/2) = 2^(-n/2): exact for even n, correctly rounded for odd n.
double inverse_sqrt_size(int n_bits);

/// |w> = N^(-1/2) sum_j |j>, 1 <= n_bits <= 12.
StateVector uniform_state(int n_bits);

/// |w~> = (N-1)^(-1/2) sum_{j>=1} |j>, the uniform state without |0>.
StateVector perturbed_state(int n_bits);

/// 1 - 2|t><t|, diagonal.
UnitaryMatrix oracle_unitary(const SearchInstance& inst);

/// 1 - 2|v><v|. Throws InputError unless v has unit norm.
UnitaryMatrix reflection_about(const StateVector& v);

/// From the uniform state, applies `diffusion * oracle` the given number of times.
SearchResult run_search(const SearchInstance& inst, const UnitaryMatrix& diffusion,
                        int iterations);

/// Success probability after 0, 1, ..., iterations rounds.
std::vector<double> success_series(const SearchInstance& inst, const UnitaryMatrix& diffusion,
                                   int iterations);

/// floor(pi/4 sqrt(N)), at least 1.
int default_iterations(int n_bits);

/// Angle between |w> and |w~>, arccos sqrt(1 - 1/N), evaluated as asin(N^-1/2).
double perturbation_angle(int n_bits);

/// ||U_w - U_w~|| = 2 sin(theta) = 2^(1 - n/2), in closed form.
double perturbation_error(int n_bits);

/// ||(U_w~ U_0)^2 - 1|| in the spectral norm.
double involution_residual(int n_bits);

/// sin^2((2k + 1) asin(N^-1/2)): the textbook success probability after k
/// exact rounds with one marked item.
double ideal_success_probability(int n_bits, int iterations);

}  // namespace cpcq::grover
