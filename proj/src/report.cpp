#include "cpcq/report.hpp"

#include <sstream>

namespace cpcq::cli {

Report::Record& Report::add(const std::string& kind) {
  Record r = Record::object();
  r["record"] = kind;
  records_.push_back(std::move(r));
  return records_.back();
}

namespace {

std::string human_value(const Report::Record& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string Report::render(Format format) const {
  std::ostringstream out;
  for (const auto& r : records_) {
    if (format == Format::Structured) {
      out << r.dump() << '\n';
      continue;
    }
    out << r.at("record").get<std::string>() << '\n';
    for (const auto& [key, value] : r.items()) {
      if (key == "record") continue;
      out << "  " << key << ": " << human_value(value) << '\n';
    }
  }
  return out.str();
}

std::string decimal(const BigInt& x) { return x.str(); }

std::string decimal(const BigRational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace cpcq::cli
