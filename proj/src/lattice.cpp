#include "cpcq/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "cpcq/linalg.hpp"
#include "cpcq/statistics.hpp"

namespace cpcq::lattice {

PropertyPredicate factored_property() {
  return {"factored", [](const Model& m) {
            return std::all_of(m.commands().begin(), m.commands().end(),
                               [&](const Command& b) { return m.is_factored(b); });
          }};
}

PropertyPredicate respects_concatenation_property() {
  return {"respects-concatenation", [](const Model& m) {
            const auto& table = m.data().unitaries;
            for (const auto& [b1, u1] : table) {
              for (const auto& [b2, u2] : table) {
                auto joint = table.find(b1 + b2);
                if (joint == table.end()) continue;
                if (max_abs_diff(joint->second, u2 * u1) > kUnitTol) return false;
              }
            }
            return true;
          }};
}

PropertyPredicate diagonal_observables_property() {
  return {"diagonal-observables", [](const Model& m) {
            for (const auto& [b, obs] : m.data().observables) {
              for (const auto& p : obs.projectors()) {
                CMatrix off = p;
                off.diagonal().setZero();
                if (off.size() > 0 && off.cwiseAbs().maxCoeff() > kProjTol) return false;
              }
            }
            return true;
          }};
}

PropertyPredicate identity_unitary_property() {
  return {"identity-unitary", [](const Model& m) {
            const auto id = CMatrix::Identity(m.dimension(), m.dimension());
            return std::all_of(m.commands().begin(), m.commands().end(), [&](const Command& b) {
              return max_abs_diff(m.resolve(b).unitary, id) <= kUnitTol;
            });
          }};
}

std::vector<Model> filter_models(const std::vector<Model>& models,
                                 const std::vector<PropertyPredicate>& props) {
  std::vector<Model> out;
  for (const auto& m : models) {
    if (std::all_of(props.begin(), props.end(), [&](const auto& p) { return p.test(m); })) {
      out.push_back(m);
    }
  }
  return out;
}

const char* to_string(FitCase c) {
  switch (c) {
    case FitCase::TooBig:
      return "too-big";
    case FitCase::NoFit:
      return "no-fit";
    case FitCase::Good:
      return "good";
  }
  return "?";
}

FitReport classify_fit(const std::vector<Model>& models, const RelativeFrequencies& data,
                       const WeightedCommandSet& w, double eps, double spread_cap,
                       const std::optional<WeightedCommandSet>& evaluation) {
  if (!(eps > 0.0)) throw InputError("classify_fit: eps must be positive");
  if (!(spread_cap > 0.0)) throw InputError("classify_fit: spread cap must be positive");
  const WeightedCommandSet& eval = evaluation ? *evaluation : w;

  FitReport r;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const double d = weighted_model_distance(models[i], data, w);
    if (d <= eps) r.within_eps.push_back({i, models[i].name(), d});
  }
  for (std::size_t a = 0; a < r.within_eps.size(); ++a) {
    for (std::size_t b = a + 1; b < r.within_eps.size(); ++b) {
      const double s = weighted_model_distance(models[r.within_eps[a].index],
                                               models[r.within_eps[b].index], eval);
      r.pairwise_spread = std::max(r.pairwise_spread, s);
    }
  }
  if (r.within_eps.empty()) {
    r.fit_case = FitCase::NoFit;
  } else if (r.pairwise_spread > spread_cap) {
    r.fit_case = FitCase::TooBig;
  } else {
    r.fit_case = FitCase::Good;
  }
  return r;
}

}  // namespace cpcq::lattice
