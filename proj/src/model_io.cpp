#include "cpcq/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cpcq {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& msg) {
  throw InputError("model file " + where + ": " + msg);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string child(const std::string& where, const std::string& key) {
  // JSON pointer escaping; command keys only ever contain 0 and 1.
  return where + "/" + key;
}

std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

double number(const json& j, const std::string& where) {
  if (!j.is_number()) schema_error(where, "expected a number");
  return j.get<double>();
}

Command command(const std::string& s, const std::string& where) {
  try {
    return Command::parse(s);
  } catch (const InputError& e) {
    schema_error(where, e.what());
  }
}

complex complex_pair(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schema_error(where, "expected a [re, im] pair");
  return {number(j[0], child(where, 0)), number(j[1], child(where, 1))};
}

CVector vector_of(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of [re, im] pairs");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_pair(j[i], child(where, i));
  return v;
}

CMatrix matrix_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) schema_error(where, "expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  CMatrix m;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const CVector row = vector_of(j[r], child(where, r));
    if (cols < 0) {
      cols = row.size();
      m.resize(rows, cols);
    } else if (row.size() != cols) {
      schema_error(child(where, r), "row has " + std::to_string(row.size()) + " entries, expected " +
                                        std::to_string(cols));
    }
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

json to_json(const complex& z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

json to_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(CVector(m.row(r).transpose())));
  return out;
}

template <typename F>
void for_each_entry(const json& doc, const char* key, F&& f) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  const std::string where = std::string("/") + key;
  if (!it->is_object()) schema_error(where, "expected an object keyed by command");
  for (const auto& [k, v] : it->items()) {
    const std::string w = child(where, k);
    f(command(k, w), v, w);
  }
}

}  // namespace

Model parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("model file: ") + e.what());
  }
  if (!doc.is_object()) schema_error("/", "expected a JSON object");

  ModelData data;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) schema_error("/name", "expected a string");
    data.name = it->get<std::string>();
  }
  const json& dim = field(doc, "dimension", "/");
  if (!dim.is_number_integer()) schema_error("/dimension", "expected an integer");
  data.dimension = dim.get<int>();

  const json& cmds = field(doc, "commands", "/");
  if (!cmds.is_array()) schema_error("/commands", "expected an array of binary strings");
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    const std::string w = child("/commands", i);
    if (!cmds[i].is_string()) schema_error(w, "expected a binary string");
    data.commands.push_back(command(cmds[i].get<std::string>(), w));
  }

  for_each_entry(doc, "states", [&](const Command& b, const json& v, const std::string& w) {
    data.states.emplace(b, vector_of(v, w));
  });
  for_each_entry(doc, "unitaries", [&](const Command& b, const json& v, const std::string& w) {
    data.unitaries.emplace(b, matrix_of(v, w));
  });
  for_each_entry(doc, "observables", [&](const Command& b, const json& v, const std::string& w) {
    if (!v.is_object()) schema_error(w, "expected {eigenvalues, projectors}");
    const json& ev = field(v, "eigenvalues", w);
    const json& pr = field(v, "projectors", w);
    if (!ev.is_array()) schema_error(w + "/eigenvalues", "expected an array of numbers");
    if (!pr.is_array()) schema_error(w + "/projectors", "expected an array of matrices");
    std::vector<double> m;
    std::vector<CMatrix> p;
    for (std::size_t i = 0; i < ev.size(); ++i) m.push_back(number(ev[i], child(w + "/eigenvalues", i)));
    for (std::size_t i = 0; i < pr.size(); ++i) p.push_back(matrix_of(pr[i], child(w + "/projectors", i)));
    try {
      data.observables.emplace(b, SpectralDecomposition(std::move(m), std::move(p)));
    } catch (const InputError& e) {
      schema_error(w, e.what());
    }
  });
  for_each_entry(doc, "durations", [&](const Command& b, const json& v, const std::string& w) {
    data.durations.emplace(b, number(v, w));
  });
  for_each_entry(doc, "factorization", [&](const Command& b, const json& v, const std::string& w) {
    if (!v.is_object()) schema_error(w, "expected {state, unitary, measurement}");
    auto part = [&](const char* key) {
      const json& s = field(v, key, w);
      if (!s.is_string()) schema_error(w + "/" + key, "expected a binary string");
      return command(s.get<std::string>(), w + "/" + key);
    };
    data.factorization.emplace(b, FactoredCommand{part("state"), part("unitary"), part("measurement")});
  });

  return Model(std::move(data));
}

std::string serialize_model(const Model& model) {
  const auto& d = model.data();
  json doc;
  if (!d.name.empty()) doc["name"] = d.name;
  doc["dimension"] = d.dimension;
  doc["commands"] = json::array();
  for (const auto& b : d.commands) doc["commands"].push_back(b.bits());
  doc["states"] = json::object();
  for (const auto& [b, v] : d.states) doc["states"][b.bits()] = to_json(v);
  doc["unitaries"] = json::object();
  for (const auto& [b, u] : d.unitaries) doc["unitaries"][b.bits()] = to_json(u);
  doc["observables"] = json::object();
  for (const auto& [b, m] : d.observables) {
    json proj = json::array();
    for (const auto& p : m.projectors()) proj.push_back(to_json(p));
    doc["observables"][b.bits()] = json{{"eigenvalues", m.eigenvalues()}, {"projectors", proj}};
  }
  if (!d.durations.empty()) {
    for (const auto& [b, t] : d.durations) doc["durations"][b.bits()] = t;
  }
  if (!d.factorization.empty()) {
    for (const auto& [b, f] : d.factorization) {
      doc["factorization"][b.bits()] = json{
          {"state", f.state.bits()}, {"unitary", f.unitary.bits()}, {"measurement", f.measurement.bits()}};
    }
  }
  return doc.dump(1) + "\n";
}

Model read_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_model(ss.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_model_file(const Model& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write model file " + path.string());
  out << serialize_model(model);
  if (!out) throw InputError("error writing model file " + path.string());
}

}  // namespace cpcq
