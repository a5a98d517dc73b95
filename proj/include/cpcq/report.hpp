#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cpcq/common.hpp"

namespace cpcq::cli {

enum class Format { Human, Structured };

/// A run report: a list of flat records, rendered either as one JSON object
/// per line or as indented key/value text.
class Report {
 public:
  using Record = nlohmann::ordered_json;

  /// Starts a record whose first field is "record": kind.
  Record& add(const std::string& kind);

  const std::vector<Record>& records() const { return records_; }
  std::string render(Format format) const;

 private:
  std::vector<Record> records_;
};

/// Exact integers go into reports as decimal strings.
std::string decimal(const BigInt& x);
std::string decimal(const BigRational& x);

}  // namespace cpcq::cli
