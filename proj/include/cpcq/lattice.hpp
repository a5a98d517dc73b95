#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cpcq/distribution.hpp"
#include "cpcq/model.hpp"

namespace cpcq::lattice {

/// A named, side-effect free test on models. Each predicate picks out a subset
/// of a model set; a list of them picks out the intersection.
struct PropertyPredicate {
  std::string name;
  std::function<bool(const Model&)> test;
};

/// Every command evaluates through a state || unitary || measurement split.
PropertyPredicate factored_property();

/// U(b1 || b2) = U(b2) U(b1) (within kUnitTol) whenever b1, b2 and b1 || b2
/// all have unitary table entries.
PropertyPredicate respects_concatenation_property();

/// Every projector of every observable is diagonal in the computational basis.
PropertyPredicate diagonal_observables_property();

/// U(b) = 1 (within kUnitTol) for every command.
PropertyPredicate identity_unitary_property();

/// Models passing every predicate, in input order.
std::vector<Model> filter_models(const std::vector<Model>& models,
                                 const std::vector<PropertyPredicate>& props);

enum class FitCase {
  TooBig,  // disparate models all fit: add properties
  NoFit,   // nothing fits: drop a property
  Good,    // the fitting models agree
};

const char* to_string(FitCase c);

struct FittingModel {
  std::size_t index = 0;  // position in the input list
  std::string name;
  double distance = 0.0;  // weighted distance to the data
};

struct FitReport {
  std::vector<FittingModel> within_eps;
  double pairwise_spread = 0.0;  // max weighted distance between two fitting models
  FitCase fit_case = FitCase::NoFit;
};

/// Classifies a model set against data. Models within `eps` (weighted
/// distance under `w`) fit; the spread between fitting models is measured with
/// `evaluation` (defaults to `w`), which may include commands outside the
/// data. NoFit if none fit, TooBig if the spread exceeds `spread_cap`, Good
/// otherwise.
FitReport classify_fit(const std::vector<Model>& models, const RelativeFrequencies& data,
                       const WeightedCommandSet& w, double eps, double spread_cap,
                       const std::optional<WeightedCommandSet>& evaluation = std::nullopt);

}  // namespace cpcq::lattice
