#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cpcq/command.hpp"
#include "cpcq/common.hpp"
#include "cpcq/distribution.hpp"
#include "cpcq/random.hpp"
#include "cpcq/spectral.hpp"

namespace cpcq {

/// Raw contents of a model: lookup tables from commands to a state vector, a
/// unitary and an observable, plus optional durations and factorizations.
///
/// A command b in `commands` is evaluated either through `factorization[b]`
/// (state, unitary and observable looked up by the three sub-commands) or, when
/// b has no factorization, by looking b up in each table directly.
///
/// The unitary table is completed by the concatenation rule
/// U(b1 || b2) = U(b2) U(b1): a command missing from the table is split into
/// table entries (for each prefix the split with the longest final piece
/// wins), and the empty command maps to the identity.
struct ModelData {
  std::string name;
  int dimension = 0;
  std::vector<Command> commands;
  std::map<Command, StateVector> states;
  std::map<Command, UnitaryMatrix> unitaries;
  std::map<Command, SpectralDecomposition> observables;
  std::map<Command, double> durations;  // seconds; stored, never composed
  std::map<Command, FactoredCommand> factorization;
};

/// State, unitary and observable that a model assigns to one command.
struct ResolvedCommand {
  StateVector state;
  UnitaryMatrix unitary;
  const SpectralDecomposition* observable = nullptr;
};

/// An immutable, validated ModelData. Construction throws InputError unless
/// every table entry has the model's dimension, every state has unit norm and
/// every unitary is unitary (kUnitTol), durations are positive, every
/// factorization flattens to its key, and every command in the command set
/// resolves to a full triple.
class Model {
 public:
  explicit Model(ModelData data);

  const ModelData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  int dimension() const { return data_.dimension; }
  const std::vector<Command>& commands() const { return data_.commands; }
  bool contains(const Command& b) const;
  bool is_factored(const Command& b) const { return data_.factorization.count(b) != 0; }

  const StateVector& state(const Command& key) const;
  const SpectralDecomposition& observable(const Command& key) const;
  /// Table entry, else the concatenation rule. Throws InputError if neither applies.
  UnitaryMatrix unitary(const Command& key) const;
  bool has_unitary(const Command& key) const;

  /// Triple for b; throws InputError if b is not in the command set.
  ResolvedCommand resolve(const Command& b) const;

  friend bool operator==(const Model& a, const Model& b);

 private:
  ModelData data_;
};

/// Command-indexed unitaries relating two models.
class EquivalenceWitness {
 public:
  explicit EquivalenceWitness(std::map<Command, UnitaryMatrix> q);
  const UnitaryMatrix& at(const Command& b) const;
  const std::map<Command, UnitaryMatrix>& entries() const { return q_; }

 private:
  std::map<Command, UnitaryMatrix> q_;
};

/// Pr(j|b) = <v(b)| U(b)^dagger M_j(b) U(b) |v(b)>, one entry per outcome of
/// M(b) in its stored order. Throws InputError for a command outside the
/// command set and InvariantViolation if the result is not a distribution
/// within kProbTol. Round-off below zero is clipped after that check.
OutcomeDistribution outcome_probabilities(const Model& model, const Command& b);

/// <v(b_v)| U(b_U)^dagger M_j(b_M) U(b_U) |v(b_v)>, looking each part up in its
/// own table. The parts need not be in the command set.
OutcomeDistribution outcome_probabilities_factored(const Model& model, const FactoredCommand& f);

/// U(b1 || b2) = U(b2) U(b1).
UnitaryMatrix compose_unitary(const Model& model, const Command& b1, const Command& b2);

/// (|v'>, 1, M) with v'(b) = U(b) v(b) for every b in the command set. The
/// result is keyed by full commands, so any factorization is dropped.
Model reduce_to_identity_form(const Model& model);

/// True iff for every b: v_beta = Q v_alpha, U_beta = Q U_alpha Q^dagger and
/// M_beta = Q M_alpha Q^dagger (projector by projector, eigenvalues matched),
/// all within kUnitTol. Throws InputError if the models do not share a
/// dimension and command set or the witness misses a command.
bool check_unitary_equivalence(const Model& alpha, const Model& beta, const EquivalenceWitness& w);

/// The model obtained by conjugating `model` command-wise with the witness.
/// The result is keyed by full commands.
Model conjugate_model(const Model& model, const EquivalenceWitness& w);

/// Map from commands to vectors, used for the auxiliary factor of mimic_models.
using VectorMap = std::function<StateVector(const Command&)>;
VectorMap constant_vector_map(StateVector v);

/// Two models on H (x) H that reproduce every Pr(j|b) of `model` and whose
/// states are orthogonal command by command: states v (x) w and v (x) w_perp,
/// unitaries U (x) 1, projectors M_j (x) 1 with unchanged eigenvalues. The
/// auxiliary maps are evaluated at the keys of the state table. Throws
/// InputError when w(b) and w_perp(b) are not orthonormal.
std::pair<Model, Model> mimic_models(const Model& model, const VectorMap& w,
                                     const VectorMap& w_perp);

/// Copy of `model` with one more command in its command set.
Model extend_model(const Model& model, const Command& b, StateVector state, UnitaryMatrix unitary,
                   SpectralDecomposition observable);

/// Random model over the given commands: Haar states and unitaries and random
/// observables with 2..dim outcomes, all keyed by full commands.
Model random_model(int dim, const std::vector<Command>& commands, RandomSource& rng);

}  // namespace cpcq
