#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cpcq/distribution.hpp"

namespace cpcq {

// Outcome counts files are comma-separated text, one row per command:
//
//   # comment
//   0110,512,488
//   ,1000,0          <- the empty command
//
// The first field is the command, the rest are non-negative integer counts by
// outcome index. Blank lines and lines starting with '#' are skipped. Errors
// name the line number.

CountsTable parse_counts(std::string_view text);
std::string serialize_counts(const CountsTable& table);

CountsTable read_counts_file(const std::filesystem::path& path);
void write_counts_file(const CountsTable& table, const std::filesystem::path& path);

/// One command per line (blank lines and '#' comments skipped); the empty
/// command is written "".
std::vector<Command> parse_command_list(std::string_view text);
std::vector<Command> read_command_list_file(const std::filesystem::path& path);

}  // namespace cpcq
