#include "cpcq/model.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include "cpcq/linalg.hpp"

namespace cpcq {

namespace {

std::string quoted(const Command& b) { return "\"" + b.bits() + "\""; }

bool same_matrix(const CMatrix& a, const CMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

template <typename M>
bool same_matrix_map(const std::map<Command, M>& a, const std::map<Command, M>& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !same_matrix(ia->second, ib->second)) return false;
  }
  return true;
}

}  // namespace

Model::Model(ModelData data) : data_(std::move(data)) {
  const int dim = data_.dimension;
  if (dim < 1 || dim > kMaxDimension) {
    throw InputError("model: dimension " + std::to_string(dim) + " outside [1, " +
                     std::to_string(kMaxDimension) + "]");
  }
  std::set<Command> seen;
  for (const auto& b : data_.commands) {
    if (!seen.insert(b).second) throw InputError("model: command " + quoted(b) + " listed twice");
  }
  for (const auto& [k, v] : data_.states) {
    const std::string what = "state for " + quoted(k);
    require_dimension(v, dim, what);
    require_unit_vector(v, what);
  }
  for (const auto& [k, u] : data_.unitaries) {
    const std::string what = "unitary for " + quoted(k);
    require_dimension(u, dim, what);
    require_unitary(u, what);
  }
  for (const auto& [k, m] : data_.observables) {
    if (m.dimension() != dim) {
      throw InputError("observable for " + quoted(k) + ": dimension " +
                       std::to_string(m.dimension()) + ", expected " + std::to_string(dim));
    }
  }
  for (const auto& [k, t] : data_.durations) {
    if (!std::isfinite(t) || t <= 0.0) {
      throw InputError("duration for " + quoted(k) + " must be a positive number of seconds");
    }
  }
  for (const auto& [k, f] : data_.factorization) {
    if (!seen.count(k)) throw InputError("factorization given for unknown command " + quoted(k));
    if (f.flatten() != k) {
      throw InputError("factorization of " + quoted(k) + " flattens to " + quoted(f.flatten()));
    }
  }
  for (const auto& b : data_.commands) {
    try {
      (void)resolve(b);
    } catch (const InputError& e) {
      throw InputError("command " + quoted(b) + " does not resolve: " + e.what());
    }
  }
}

bool Model::contains(const Command& b) const {
  return std::find(data_.commands.begin(), data_.commands.end(), b) != data_.commands.end();
}

const StateVector& Model::state(const Command& key) const {
  auto it = data_.states.find(key);
  if (it == data_.states.end()) throw InputError("no state for command " + quoted(key));
  return it->second;
}

const SpectralDecomposition& Model::observable(const Command& key) const {
  auto it = data_.observables.find(key);
  if (it == data_.observables.end()) throw InputError("no observable for command " + quoted(key));
  return it->second;
}

bool Model::has_unitary(const Command& key) const {
  try {
    (void)unitary(key);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

UnitaryMatrix Model::unitary(const Command& key) const {
  if (auto it = data_.unitaries.find(key); it != data_.unitaries.end()) return it->second;
  const int dim = data_.dimension;
  if (key.empty()) return UnitaryMatrix::Identity(dim, dim);

  // prefix[i] holds U(key[0, i)) once some split of that prefix into table
  // entries is known; later pieces multiply from the left.
  const std::size_t n = key.size();
  std::vector<std::optional<UnitaryMatrix>> prefix(n + 1);
  prefix[0] = UnitaryMatrix::Identity(dim, dim);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!prefix[j]) continue;
      auto piece = data_.unitaries.find(key.substr(j, i - j));
      if (piece == data_.unitaries.end()) continue;
      prefix[i] = piece->second * *prefix[j];
      break;
    }
  }
  if (!prefix[n]) {
    throw InputError("no unitary for command " + quoted(key) +
                     " and it is not a concatenation of known commands");
  }
  return *prefix[n];
}

ResolvedCommand Model::resolve(const Command& b) const {
  if (!contains(b)) throw InputError("unknown command " + quoted(b));
  if (auto f = data_.factorization.find(b); f != data_.factorization.end()) {
    return {state(f->second.state), unitary(f->second.unitary), &observable(f->second.measurement)};
  }
  return {state(b), unitary(b), &observable(b)};
}

bool operator==(const Model& a, const Model& b) {
  const auto& x = a.data_;
  const auto& y = b.data_;
  return x.name == y.name && x.dimension == y.dimension && x.commands == y.commands &&
         same_matrix_map(x.states, y.states) && same_matrix_map(x.unitaries, y.unitaries) &&
         x.observables == y.observables && x.durations == y.durations &&
         x.factorization == y.factorization;
}

EquivalenceWitness::EquivalenceWitness(std::map<Command, UnitaryMatrix> q) : q_(std::move(q)) {
  for (const auto& [b, u] : q_) require_unitary(u, "witness for " + quoted(b));
}

const UnitaryMatrix& EquivalenceWitness::at(const Command& b) const {
  auto it = q_.find(b);
  if (it == q_.end()) throw InputError("witness has no unitary for command " + quoted(b));
  return it->second;
}

namespace {

OutcomeDistribution probabilities_of(const StateVector& v, const UnitaryMatrix& u,
                                     const SpectralDecomposition& m, const std::string& context) {
  require_dimension(v, m.dimension(), context + ": state");
  require_dimension(u, m.dimension(), context + ": unitary");
  require_unit_vector(v, context + ": state");
  const StateVector psi = apply_unitary(u, v);

  OutcomeDistribution out;
  out.eigenvalues = m.eigenvalues();
  out.probs.reserve(m.outcome_count());
  double total = 0.0;
  for (const auto& mj : m.projectors()) {
    const double p = psi.dot(mj * psi).real();
    if (p < -kProbTol) {
      throw InvariantViolation(context + ": negative probability " + std::to_string(p));
    }
    out.probs.push_back(p);
    total += p;
  }
  if (std::abs(total - 1.0) > kProbTol) {
    throw InvariantViolation(context + ": probabilities sum to " + std::to_string(total));
  }
  for (auto& p : out.probs) p = std::max(p, 0.0);
  return out;
}

}  // namespace

OutcomeDistribution outcome_probabilities(const Model& model, const Command& b) {
  const auto r = model.resolve(b);
  return probabilities_of(r.state, r.unitary, *r.observable, "command " + quoted(b));
}

OutcomeDistribution outcome_probabilities_factored(const Model& model, const FactoredCommand& f) {
  return probabilities_of(model.state(f.state), model.unitary(f.unitary),
                          model.observable(f.measurement),
                          "factored command " + quoted(f.flatten()));
}

UnitaryMatrix compose_unitary(const Model& model, const Command& b1, const Command& b2) {
  return model.unitary(b2) * model.unitary(b1);
}

Model reduce_to_identity_form(const Model& model) {
  ModelData out;
  out.name = model.name();
  out.dimension = model.dimension();
  out.commands = model.commands();
  out.durations = model.data().durations;
  const auto id = UnitaryMatrix::Identity(model.dimension(), model.dimension());
  for (const auto& b : model.commands()) {
    const auto r = model.resolve(b);
    out.states.emplace(b, apply_unitary(r.unitary, r.state));
    out.unitaries.emplace(b, id);
    out.observables.emplace(b, *r.observable);
  }
  return Model(std::move(out));
}

namespace {

void require_comparable(const Model& alpha, const Model& beta) {
  if (alpha.dimension() != beta.dimension()) {
    throw InputError("models have dimensions " + std::to_string(alpha.dimension()) + " and " +
                     std::to_string(beta.dimension()));
  }
  auto a = alpha.commands();
  auto b = beta.commands();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw InputError("models do not share a command set");
}

bool same_spectral(const SpectralDecomposition& x, const SpectralDecomposition& y) {
  if (x.outcome_count() != y.outcome_count()) return false;
  const auto ox = x.ascending_order();
  const auto oy = y.ascending_order();
  for (std::size_t k = 0; k < ox.size(); ++k) {
    if (std::abs(x.eigenvalues()[ox[k]] - y.eigenvalues()[oy[k]]) > kEigenMergeTol) return false;
    if (max_abs_diff(x.projectors()[ox[k]], y.projectors()[oy[k]]) > kUnitTol) return false;
  }
  return true;
}

}  // namespace

bool check_unitary_equivalence(const Model& alpha, const Model& beta,
                               const EquivalenceWitness& w) {
  require_comparable(alpha, beta);
  for (const auto& b : alpha.commands()) {
    const UnitaryMatrix& q = w.at(b);
    require_dimension(q, alpha.dimension(), "witness for " + quoted(b));
    const auto ra = alpha.resolve(b);
    const auto rb = beta.resolve(b);
    if ((rb.state - q * ra.state).cwiseAbs().maxCoeff() > kUnitTol) return false;
    if (max_abs_diff(rb.unitary, q * ra.unitary * q.adjoint()) > kUnitTol) return false;
    if (!same_spectral(*rb.observable, ra.observable->conjugated(q))) return false;
  }
  return true;
}

Model conjugate_model(const Model& model, const EquivalenceWitness& w) {
  ModelData out;
  out.name = model.name();
  out.dimension = model.dimension();
  out.commands = model.commands();
  out.durations = model.data().durations;
  for (const auto& b : model.commands()) {
    const UnitaryMatrix& q = w.at(b);
    require_dimension(q, model.dimension(), "witness for " + quoted(b));
    const auto r = model.resolve(b);
    out.states.emplace(b, q * r.state);
    out.unitaries.emplace(b, q * r.unitary * q.adjoint());
    out.observables.emplace(b, r.observable->conjugated(q));
  }
  return Model(std::move(out));
}

VectorMap constant_vector_map(StateVector v) {
  return [v = std::move(v)](const Command&) { return v; };
}

std::pair<Model, Model> mimic_models(const Model& model, const VectorMap& w,
                                     const VectorMap& w_perp) {
  const int d = model.dimension();
  if (d * d > kMaxDimension) {
    throw InputError("mimic_models: doubled dimension " + std::to_string(d * d) +
                     " exceeds " + std::to_string(kMaxDimension));
  }
  const auto& src = model.data();
  ModelData a;
  a.dimension = d * d;
  a.commands = src.commands;
  a.durations = src.durations;
  a.factorization = src.factorization;

  const CMatrix id = CMatrix::Identity(d, d);
  for (const auto& [k, u] : src.unitaries) a.unitaries.emplace(k, kron(u, id));
  for (const auto& [k, m] : src.observables) {
    std::vector<CMatrix> p;
    for (const auto& mj : m.projectors()) p.push_back(kron(mj, id));
    a.observables.emplace(k, SpectralDecomposition(m.eigenvalues(), std::move(p)));
  }
  ModelData b = a;
  a.name = src.name.empty() ? "mimic-w" : src.name + "/mimic-w";
  b.name = src.name.empty() ? "mimic-w_perp" : src.name + "/mimic-w_perp";

  for (const auto& [k, v] : src.states) {
    const StateVector wk = w(k);
    const StateVector wp = w_perp(k);
    require_dimension(wk, d, "w(" + quoted(k) + ")");
    require_dimension(wp, d, "w_perp(" + quoted(k) + ")");
    require_unit_vector(wk, "w(" + quoted(k) + ")");
    require_unit_vector(wp, "w_perp(" + quoted(k) + ")");
    if (std::abs(wk.dot(wp)) > kUnitTol) {
      throw InputError("mimic_models: w and w_perp are not orthogonal at " + quoted(k));
    }
    a.states.emplace(k, kron(v, wk));
    b.states.emplace(k, kron(v, wp));
  }
  return {Model(std::move(a)), Model(std::move(b))};
}

Model extend_model(const Model& model, const Command& b, StateVector state, UnitaryMatrix unitary,
                   SpectralDecomposition observable) {
  if (model.contains(b)) throw InputError("extend_model: command " + quoted(b) + " already present");
  ModelData data = model.data();
  data.commands.push_back(b);
  if (!data.states.emplace(b, std::move(state)).second ||
      !data.unitaries.emplace(b, std::move(unitary)).second ||
      !data.observables.emplace(b, std::move(observable)).second) {
    throw InputError("extend_model: a table already has an entry for " + quoted(b));
  }
  return Model(std::move(data));
}

Model random_model(int dim, const std::vector<Command>& commands, RandomSource& rng) {
  ModelData data;
  data.name = "random";
  data.dimension = dim;
  data.commands = commands;
  for (const auto& b : commands) {
    data.states.emplace(b, random_state(dim, rng));
    data.unitaries.emplace(b, random_unitary(dim, rng));
    const int outcomes =
        dim == 1 ? 1 : 2 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(dim - 1));
    data.observables.emplace(b, random_spectral_decomposition(dim, outcomes, rng));
  }
  return Model(std::move(data));
}

}  // namespace cpcq
