#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace cpcq {

/// A finite binary string sent by the process-control computer. The empty
/// command is valid and is the identity for concatenation.
class Command {
 public:
  Command() = default;

  /// Throws InputError unless every character is '0' or '1'.
  static Command parse(std::string_view bits);

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  Command substr(std::size_t pos, std::size_t len = std::string::npos) const;

  friend Command operator+(const Command& a, const Command& b);
  friend auto operator<=>(const Command&, const Command&) = default;
  friend bool operator==(const Command&, const Command&) = default;

 private:
  explicit Command(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

/// A command split into its preparation, transformation and measurement parts.
struct FactoredCommand {
  Command state;
  Command unitary;
  Command measurement;

  /// state || unitary || measurement
  Command flatten() const { return state + unitary + measurement; }

  friend bool operator==(const FactoredCommand&, const FactoredCommand&) = default;
};

}  // namespace cpcq
