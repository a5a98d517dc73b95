#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cpcq/common.hpp"
#include "cpcq/distribution.hpp"
#include "cpcq/model.hpp"

namespace cpcq {

/// Statistical distance between two outcome distributions: the angle
/// arccos(sum_j sqrt(p_j q_j)) between the amplitude vectors sqrt(p) and
/// sqrt(q), in [0, pi/2].
///
/// It is evaluated as 2 asin(|sqrt(p) - sqrt(q)| / 2), which is the same angle
/// for normalized inputs but keeps full relative accuracy near zero (arccos
/// loses half the digits there). Zero entries contribute nothing.
double wootters_distance(const std::vector<double>& p, const std::vector<double>& q);

/// Whether N trials can tell apart distributions at distance d: sqrt(N) d > 1.
bool distinguishable(std::uint64_t n_trials, double d);

/// ceil(eps^-2), computed exactly from the binary value of eps. Requires
/// 0 < eps <= pi/2.
BigInt min_sample_size(double epsilon);

/// Sample-size lower bound for checking one n-bit gate command against a
/// model at the precision quantum search needs (eps = 2^(1 - n/2)).
struct VerificationCost {
  int n_bits = 0;
  BigInt per_vector_samples;  // min_sample_size(2^(1 - n/2)): 2^(n-2), or 1 when n = 1
  BigInt n_vectors;           // 2^n preparation vectors
  BigInt total_lower_bound;   // 2^(2n-2)
};
VerificationCost verification_cost(int n_bits);

/// Per-command distance between two models. Outcomes are paired by ascending
/// eigenvalue; InputError if the spectra differ by more than kEigenMergeTol.
double command_distance(const Model& alpha, const Model& beta, const Command& b);

/// Distance between a model and measured frequencies at one command. Entry j
/// of `freqs` is the outcome of the j-th smallest eigenvalue of M(b).
double command_distance(const Model& alpha, const std::vector<double>& freqs, const Command& b);

/// sum_b weight(b) d(Pr_alpha(.|b), Pr_beta(.|b)), summed in entry order.
double weighted_model_distance(const Model& alpha, const Model& beta, const WeightedCommandSet& w);
double weighted_model_distance(const Model& alpha, const RelativeFrequencies& data,
                               const WeightedCommandSet& w);

/// Angle between the rays of two unit vectors, arccos|<a|b>|, evaluated as
/// atan2(|b - <a|b> a|, |<a|b>|) for accuracy near zero. Bounds the statistical
/// distance of the distributions any shared measurement induces.
double state_distance_bound(const StateVector& a, const StateVector& b);

/// Two identity-unitary models, both reproducing `freqs` exactly, whose
/// states are orthogonal for every command.
///
/// With K outcomes, states are sum_j sqrt(f_j) |j> and sum_j sqrt(f_j)
/// e^{i phi_j} |j> measured in the computational basis. The phases close the
/// polygon sum_j f_j e^{i phi_j} = 0, which needs max_j f_j <= 1/2: the support
/// is dealt into three groups with sums no larger than 1/2 and the triangle
/// they form fixes the group phases. When one frequency exceeds 1/2 the space
/// gains one extra basis vector that joins that outcome's projector, and the
/// second state tilts into it by the angle that cancels the overlap.
///
/// All frequency vectors must have the same length. InputError("degenerate
/// frequency vector") when a command has fewer than two positive frequencies.
std::pair<Model, Model> orthogonal_perfect_fit(const RelativeFrequencies& freqs);

/// Single-command form, keyed by `command`.
std::pair<Model, Model> orthogonal_perfect_fit(const std::vector<double>& freqs,
                                               const Command& command = Command::parse("0"));

}  // namespace cpcq
