#include "cpcq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cpcq/counts_io.hpp"
#include "cpcq/grover.hpp"
#include "cpcq/lattice.hpp"
#include "cpcq/model_io.hpp"
#include "cpcq/precision_grid.hpp"
#include "cpcq/report.hpp"
#include "cpcq/sampling.hpp"
#include "cpcq/statistics.hpp"
#include "cpcq/timing.hpp"

namespace cpcq::cli {

namespace {

// Fixed so that sampled counts do not depend on the machine's core count.
constexpr unsigned kSamplingStreams = 4;

double default_epsilon(int n_bits) { return grover::perturbation_error(n_bits); }

// ---- grover-demo

struct GroverArgs {
  int n_bits = 4;
  std::optional<int> iterations;
  std::uint64_t target = 0;
  bool perturbed = false;
  std::uint64_t shots = 0;
};

void grover_demo(const GroverArgs& a, std::uint64_t seed, Report& report) {
  const grover::SearchInstance inst(a.n_bits, a.target);
  if (a.perturbed && a.target != 0) {
    throw InputError("--perturbed removes the |0> component, so it needs --target 0");
  }
  const int k = a.iterations ? *a.iterations : grover::default_iterations(a.n_bits);
  const StateVector start =
      a.perturbed ? grover::perturbed_state(a.n_bits) : grover::uniform_state(a.n_bits);
  const UnitaryMatrix diffusion = grover::reflection_about(start);
  const auto result = grover::run_search(inst, diffusion, k);

  auto& r = report.add("grover");
  r["n"] = a.n_bits;
  r["target"] = a.target;
  r["diffusion"] = a.perturbed ? "perturbed" : "exact";
  r["iterations"] = result.iterations;
  r["success_probability"] = result.success_probability;
  if (!a.perturbed) r["ideal_success_probability"] = grover::ideal_success_probability(a.n_bits, k);
  r["epsilon"] = grover::perturbation_error(a.n_bits);
  r["theta"] = grover::perturbation_angle(a.n_bits);
  r["involution_residual"] = grover::involution_residual(a.n_bits);
  r["series"] = grover::success_series(inst, diffusion, k);

  if (a.shots > 0) {
    OutcomeDistribution dist;
    for (Eigen::Index i = 0; i < result.final_state.size(); ++i) {
      dist.probs.push_back(std::norm(result.final_state[i]));
      dist.eigenvalues.push_back(static_cast<double>(i));
    }
    // Roundoff can leave the total a few ulps away from 1.
    double total = 0.0;
    for (double p : dist.probs) total += p;
    for (double& p : dist.probs) p /= total;
    const auto counts = sample_outcomes_parallel(dist, a.shots, seed, kSamplingStreams);
    auto& s = report.add("grover-shots");
    s["shots"] = a.shots;
    s["target_hits"] = counts.counts[static_cast<std::size_t>(a.target)];
    s["hit_rate"] = static_cast<double>(counts.counts[static_cast<std::size_t>(a.target)]) /
                    static_cast<double>(a.shots);
  }
}

// ---- sample-size

struct SampleSizeArgs {
  int n_bits = 10;
  std::optional<int> to;
  std::optional<double> epsilon;
};

void sample_size(const SampleSizeArgs& a, Report& report) {
  if (a.epsilon) {
    auto& r = report.add("sample-size");
    r["epsilon"] = *a.epsilon;
    r["min_samples"] = decimal(min_sample_size(*a.epsilon));
    return;
  }
  const int last = a.to.value_or(a.n_bits);
  if (last < a.n_bits) throw InputError("--to must not be smaller than --n-bits");
  if (last > 4096) throw InputError("--to is limited to 4096 bits");
  for (int n = a.n_bits; n <= last; ++n) {
    const auto cost = verification_cost(n);
    auto& r = report.add("verification-cost");
    r["n"] = n;
    r["epsilon"] = default_epsilon(n);
    r["per_vector"] = decimal(cost.per_vector_samples);
    r["n_vectors"] = decimal(cost.n_vectors);
    r["total"] = decimal(cost.total_lower_bound);
  }
}

// ---- timing

struct TimingArgs {
  int n_bits = 100;
  double clock_precision = timing::kMaserPrecision;
  std::optional<double> epsilon;
  std::optional<double> t_not;
  std::optional<double> delta_t;
};

void timing_report(const TimingArgs& a, Report& report) {
  if (a.n_bits < 1) throw InputError("--n-bits must be at least 1");
  const double eps = a.epsilon.value_or(default_epsilon(a.n_bits));
  const bool feasible = timing::maser_feasible(a.n_bits, a.clock_precision);
  auto& r = report.add("timing");
  r["n"] = a.n_bits;
  r["epsilon"] = eps;
  r["max_relative_error"] = timing::max_relative_timing_error(eps);
  r["bound"] = timing::search_timing_bound(a.n_bits);
  if (const auto exact = timing::search_timing_bound_exact(a.n_bits)) {
    r["bound_exact"] = decimal(*exact);
  }
  r["clock_precision"] = a.clock_precision;
  r["verdict"] = feasible ? "feasible" : "infeasible";
  r["first_infeasible_bits"] = timing::first_infeasible_bits(a.clock_precision);

  if (a.t_not.has_value() != a.delta_t.has_value()) {
    throw InputError("--t-not and --delta-t go together");
  }
  if (a.t_not) {
    const timing::TimingBudget budget(*a.t_not, *a.delta_t);
    StateVector zero(2);
    zero << 1.0, 0.0;
    StateVector one(2);
    one << 0.0, 1.0;
    const auto m = timing::simulate_mistimed_not(budget, zero);
    auto& s = report.add("mistimed-not");
    s["t_not"] = budget.t_not();
    s["delta_t"] = budget.delta_t();
    s["relative_error"] = budget.relative_error();
    s["omega"] = budget.omega();
    s["angle_error"] = m.angle_error;
    s["bloch_angle_from_target"] = timing::bloch_angle(one, m.state);
    s["within_tolerance"] = budget.relative_error() <= timing::max_relative_timing_error(eps);
  }
}

// ---- grid-cost

struct GridArgs {
  int n_bits = 5;
  std::string ratio = "sqrt2";
  int gates = 1;
  double budget = grid::kDefaultBudgetLog2;
  std::optional<double> epsilon;
  std::optional<std::string> trials;
};

void grid_cost(const GridArgs& a, Report& report) {
  if (a.n_bits < 1) throw InputError("--n-bits must be at least 1");
  const double eps = a.epsilon.value_or(default_epsilon(a.n_bits));
  const grid::GridQuery q(a.n_bits, eps, grid::GridRatio::parse(a.ratio), a.gates);
  BigInt trials;
  if (a.trials) {
    try {
      trials = BigInt(*a.trials);
    } catch (const std::exception&) {
      throw InputError("--trials \"" + *a.trials + "\" is not an integer");
    }
  } else {
    trials = min_sample_size(q.eps_prime);
  }
  const auto v = grid::blind_search_verdict(q, trials, a.budget);

  auto& r = report.add("grid-cost");
  r["n"] = a.n_bits;
  r["d"] = decimal(v.grid.d);
  r["ratio"] = q.ratio.value();
  r["epsilon"] = q.eps;
  r["epsilon_prime"] = q.eps_prime;
  r["log2_points"] = v.grid.log2_points;
  if (v.grid.log2_exact) r["log2_points_exact"] = decimal(*v.grid.log2_exact);
  r["decimal_order"] = v.grid.decimal_order;
  if (v.grid.points) r["points"] = decimal(*v.grid.points);
  r["gates"] = a.gates;
  r["trials_per_command"] = decimal(trials);
  r["log2_total"] = v.log2_total;
  r["budget_log2"] = v.budget_log2;
  r["verdict"] = v.hopeless ? "hopeless" : "within-budget";
}

// ---- distinguish

struct DistinguishArgs {
  std::string model_a;
  std::string model_b;
  std::optional<std::string> counts;
  std::optional<std::uint64_t> trials;
};

void distinguish(const DistinguishArgs& a, Report& report) {
  if (!a.counts && !a.trials) throw InputError("distinguish needs --counts or --trials");
  const Model alpha = read_model_file(a.model_a);
  const Model beta = read_model_file(a.model_b);
  std::optional<CountsTable> table;
  if (a.counts) table = read_counts_file(*a.counts);

  for (const auto& b : alpha.commands()) {
    if (!beta.contains(b)) {
      throw InputError("model " + a.model_b + " has no command \"" + b.bits() + "\"");
    }
  }
  for (const auto& b : alpha.commands()) {
    const OutcomeCounts* row = nullptr;
    if (table) {
      auto it = table->find(b);
      if (it != table->end()) row = &it->second;
    }
    const std::uint64_t n = a.trials ? *a.trials : (row ? row->n_trials() : 0);
    const double d = command_distance(alpha, beta, b);

    auto& r = report.add("command");
    r["command"] = b.bits();
    r["distance"] = d;
    r["n_trials"] = n;
    r["distinguishable"] = n > 0 && distinguishable(n, d);
    if (row) {
      const auto freqs = row->frequencies();
      const double da = command_distance(alpha, freqs, b);
      const double db = command_distance(beta, freqs, b);
      r["distance_a_data"] = da;
      r["distance_b_data"] = db;
      r["a_rejected"] = distinguishable(row->n_trials(), da);
      r["b_rejected"] = distinguishable(row->n_trials(), db);
    }
  }
  auto& s = report.add("summary");
  s["model_a"] = alpha.name();
  s["model_b"] = beta.name();
  s["weighted_distance"] =
      weighted_model_distance(alpha, beta, WeightedCommandSet::uniform(alpha.commands()));
}

// ---- mimic

struct MimicArgs {
  std::string model;
  std::string out_a;
  std::string out_b;
};

double max_probability_error(const Model& reference, const Model& candidate) {
  double worst = 0.0;
  for (const auto& b : reference.commands()) {
    const auto p = outcome_probabilities(reference, b).probs;
    const auto q = outcome_probabilities(candidate, b).probs;
    if (p.size() != q.size()) return INFINITY;
    for (std::size_t j = 0; j < p.size(); ++j) worst = std::max(worst, std::abs(p[j] - q[j]));
  }
  return worst;
}

double max_overlap(const Model& alpha, const Model& beta) {
  double worst = 0.0;
  for (const auto& b : alpha.commands()) {
    worst = std::max(worst, std::abs(alpha.resolve(b).state.dot(beta.resolve(b).state)));
  }
  return worst;
}

void mimic(const MimicArgs& a, Report& report) {
  const Model model = read_model_file(a.model);
  const int dim = model.dimension();
  if (dim < 2) throw InputError("mimic needs a model of dimension at least 2");
  StateVector w = StateVector::Zero(dim);
  w[0] = 1.0;
  StateVector w_perp = StateVector::Zero(dim);
  w_perp[1] = 1.0;
  const auto [alpha, beta] =
      mimic_models(model, constant_vector_map(w), constant_vector_map(w_perp));
  write_model_file(alpha, a.out_a);
  write_model_file(beta, a.out_b);

  auto& r = report.add("mimic");
  r["model"] = model.name();
  r["dimension"] = model.dimension();
  r["mimic_dimension"] = alpha.dimension();
  r["commands"] = model.commands().size();
  r["out_a"] = a.out_a;
  r["out_b"] = a.out_b;
  r["max_probability_error"] =
      std::max(max_probability_error(model, alpha), max_probability_error(model, beta));
  r["max_overlap"] = max_overlap(alpha, beta);
}

// ---- orthofit

struct OrthofitArgs {
  std::optional<std::string> freqs;
  std::optional<std::string> counts;
  std::string command = "0";
  std::string out_a;
  std::string out_b;
};

std::vector<double> parse_freqs(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--freqs: \"" + item + "\" is not a number");
    }
  }
  return out;
}

void orthofit(const OrthofitArgs& a, Report& report) {
  if (a.freqs.has_value() == a.counts.has_value()) {
    throw InputError("orthofit needs exactly one of --freqs and --counts");
  }
  RelativeFrequencies data;
  if (a.freqs) {
    data.emplace(Command::parse(a.command), parse_freqs(*a.freqs));
  } else {
    data = relative_frequencies(read_counts_file(*a.counts));
  }
  const auto [alpha, beta] = orthogonal_perfect_fit(data);
  write_model_file(alpha, a.out_a);
  write_model_file(beta, a.out_b);

  double worst = 0.0;
  for (const auto& [b, f] : data) {
    double total = 0.0;
    for (double x : f) total += x;
    for (const Model* m : {&alpha, &beta}) {
      const auto p = outcome_probabilities(*m, b).probs;
      for (std::size_t j = 0; j < f.size(); ++j) {
        worst = std::max(worst, std::abs(p[j] - f[j] / total));
      }
    }
  }
  auto& r = report.add("orthofit");
  r["commands"] = data.size();
  r["dimension"] = alpha.dimension();
  r["out_a"] = a.out_a;
  r["out_b"] = a.out_b;
  r["max_frequency_error"] = worst;
  r["max_overlap"] = max_overlap(alpha, beta);
}

// ---- fit

struct FitArgs {
  std::vector<std::string> models;
  std::string data;
  double eps = 0.0;
  double spread_cap = 0.0;
  std::optional<std::string> eval_commands;
  std::vector<std::string> properties;
};

lattice::PropertyPredicate property_named(const std::string& name) {
  if (name == "factored") return lattice::factored_property();
  if (name == "respects-concatenation") return lattice::respects_concatenation_property();
  if (name == "diagonal-observables") return lattice::diagonal_observables_property();
  if (name == "identity-unitary") return lattice::identity_unitary_property();
  throw InputError("unknown property \"" + name + "\"");
}

void fit(const FitArgs& a, Report& report) {
  std::vector<lattice::PropertyPredicate> props;
  for (const auto& name : a.properties) props.push_back(property_named(name));

  std::vector<Model> models;
  for (const auto& path : a.models) models.push_back(read_model_file(path));
  const RelativeFrequencies data = relative_frequencies(read_counts_file(a.data));
  std::vector<Command> data_commands;
  for (const auto& [b, f] : data) data_commands.push_back(b);
  const auto w = WeightedCommandSet::uniform(data_commands);
  std::optional<WeightedCommandSet> eval;
  if (a.eval_commands) {
    eval = WeightedCommandSet::uniform(read_command_list_file(*a.eval_commands));
  }

  std::vector<Model> kept;
  std::vector<std::size_t> kept_index;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const bool pass = lattice::filter_models({models[i]}, props).size() == 1;
    auto& r = report.add("model");
    r["index"] = i;
    r["path"] = a.models[i];
    r["name"] = models[i].name();
    r["passes_properties"] = pass;
    if (pass) {
      kept.push_back(models[i]);
      kept_index.push_back(i);
    }
  }

  const auto fr = lattice::classify_fit(kept, data, w, a.eps, a.spread_cap, eval);
  auto& s = report.add("fit");
  s["properties"] = a.properties;
  s["eps"] = a.eps;
  s["spread_cap"] = a.spread_cap;
  s["candidates"] = kept.size();
  auto fitting = nlohmann::ordered_json::array();
  for (const auto& m : fr.within_eps) {
    nlohmann::ordered_json e;
    e["index"] = kept_index[m.index];
    e["name"] = m.name;
    e["distance"] = m.distance;
    fitting.push_back(std::move(e));
  }
  s["fitting"] = std::move(fitting);
  s["pairwise_spread"] = fr.pairwise_spread;
  s["case"] = lattice::to_string(fr.fit_case);
}

void write_output(const std::string& text, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open output file " + path);
  f << text;
  if (!f) throw InputError("failed writing output file " + path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculators and demonstrations for command-indexed quantum models"};
  app.name(args.empty() ? "cpcq" : args.front());
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string format = "structured";
  std::string output;
  app.add_option("--seed", seed, "Seed for every random draw (echoed in the report)")
      ->capture_default_str();
  app.add_option("--format", format, "structured (JSON Lines) or human")
      ->check(CLI::IsMember({"structured", "human"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write the report to this file instead of stdout");

  GroverArgs ga;
  auto* g = app.add_subcommand("grover-demo", "Run exact or perturbed quantum search");
  g->add_option("--n-bits", ga.n_bits, "Register size n (1..12)")->capture_default_str();
  g->add_option("--iterations", ga.iterations, "Iterations (default floor(pi/4 sqrt N))");
  g->add_option("--target", ga.target, "Marked basis index")->capture_default_str();
  g->add_flag("--perturbed", ga.perturbed, "Diffuse about the state lacking |0>");
  g->add_option("--shots", ga.shots, "Sample this many measurements of the final state")
      ->capture_default_str();

  SampleSizeArgs sa;
  auto* ss = app.add_subcommand("sample-size", "Trials needed to verify gates at 2^(1-n/2)");
  ss->add_option("--n-bits", sa.n_bits, "First register size")->capture_default_str();
  ss->add_option("--to", sa.to, "Last register size of the table");
  ss->add_option("--epsilon", sa.epsilon, "Report ceil(1/epsilon^2) for this distance instead");

  TimingArgs ta;
  auto* t = app.add_subcommand("timing", "Clock precision needed by quantum search");
  t->add_option("--n-bits", ta.n_bits, "Register size")->capture_default_str();
  t->add_option("--clock-precision", ta.clock_precision, "Relative clock precision")
      ->capture_default_str();
  t->add_option("--epsilon", ta.epsilon, "Gate error budget (default 2^(1-n/2))");
  t->add_option("--t-not", ta.t_not, "NOT gate duration in seconds");
  t->add_option("--delta-t", ta.delta_t, "Timing error in seconds");

  GridArgs gr;
  auto* gc = app.add_subcommand("grid-cost", "Cost of blind search for a better gate command");
  gc->add_option("--n-bits", gr.n_bits, "Register size")->capture_default_str();
  gc->add_option("--ratio", gr.ratio, "eps/eps': sqrt2, sqrt2^K or a number > 1")
      ->capture_default_str();
  gc->add_option("--gates", gr.gates, "Number of gate commands to refine")->capture_default_str();
  gc->add_option("--budget", gr.budget, "log2 of the affordable number of trials")
      ->capture_default_str();
  gc->add_option("--epsilon", gr.epsilon, "Current precision (default 2^(1-n/2))");
  gc->add_option("--trials", gr.trials, "Trials per candidate (default ceil(eps'^-2))");

  DistinguishArgs da;
  auto* d = app.add_subcommand("distinguish", "Compare two models and optional counts");
  d->add_option("--model-a", da.model_a, "First model file")->required();
  d->add_option("--model-b", da.model_b, "Second model file")->required();
  d->add_option("--counts", da.counts, "Outcome counts file");
  d->add_option("--trials", da.trials, "Trials per command (overrides the counts)");

  MimicArgs ma;
  auto* mi = app.add_subcommand("mimic", "Write two orthogonal models reproducing a model");
  mi->add_option("--model", ma.model, "Input model file")->required();
  mi->add_option("--out-a", ma.out_a, "First output model file")->required();
  mi->add_option("--out-b", ma.out_b, "Second output model file")->required();

  OrthofitArgs oa;
  auto* o = app.add_subcommand("orthofit", "Write two orthogonal models fitting frequencies");
  o->add_option("--freqs", oa.freqs, "Comma separated relative frequencies");
  o->add_option("--command", oa.command, "Command for --freqs")->capture_default_str();
  o->add_option("--counts", oa.counts, "Outcome counts file");
  o->add_option("--out-a", oa.out_a, "First output model file")->required();
  o->add_option("--out-b", oa.out_b, "Second output model file")->required();

  FitArgs fa;
  auto* f = app.add_subcommand("fit", "Classify a model set against data");
  f->add_option("--models", fa.models, "Model files")->required()->expected(1, -1);
  f->add_option("--data", fa.data, "Outcome counts file")->required();
  f->add_option("--eps", fa.eps, "Fit threshold on the weighted distance")->required();
  f->add_option("--spread-cap", fa.spread_cap, "Largest acceptable spread")->required();
  f->add_option("--eval-commands", fa.eval_commands, "Commands for measuring the spread");
  f->add_option("--property", fa.properties,
                "Keep models with this property: factored, respects-concatenation, "
                "diagonal-observables, identity-unitary");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("cpcq");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Report report;
    auto* chosen = app.get_subcommands().front();
    auto& run_record = report.add("run");
    run_record["subcommand"] = chosen->get_name();
    run_record["seed"] = seed;

    if (chosen == g) {
      grover_demo(ga, seed, report);
    } else if (chosen == ss) {
      sample_size(sa, report);
    } else if (chosen == t) {
      timing_report(ta, report);
    } else if (chosen == gc) {
      grid_cost(gr, report);
    } else if (chosen == d) {
      distinguish(da, report);
    } else if (chosen == mi) {
      mimic(ma, report);
    } else if (chosen == o) {
      orthofit(oa, report);
    } else {
      fit(fa, report);
    }

    const std::string text =
        report.render(format == "human" ? Format::Human : Format::Structured);
    if (output.empty()) {
      out << text;
    } else {
      write_output(text, output);
    }
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cpcq::cli
