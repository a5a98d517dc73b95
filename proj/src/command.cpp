#include "cpcq/command.hpp"

#include "cpcq/common.hpp"

namespace cpcq {

Command Command::parse(std::string_view bits) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw InputError("command \"" + std::string(bits) + "\": character " + std::to_string(i) +
                       " is not a binary digit");
    }
  }
  return Command(std::string(bits));
}

Command Command::substr(std::size_t pos, std::size_t len) const {
  return Command(bits_.substr(pos, len));
}

Command operator+(const Command& a, const Command& b) { return Command(a.bits_ + b.bits_); }

}  // namespace cpcq
