#include "cpcq/counts_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cpcq {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    f(line, line_no);
  }
}

std::string slurp(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw InputError(std::string("cannot open ") + what + " " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

CountsTable parse_counts(std::string_view text) {
  CountsTable table;
  std::size_t width = 0;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const std::string at = "counts line " + std::to_string(line_no) + ": ";
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() < 2) throw InputError(at + "expected a command and at least one count");

    Command b;
    try {
      b = Command::parse(fields[0]);
    } catch (const InputError& e) {
      throw InputError(at + e.what());
    }
    OutcomeCounts c;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      std::uint64_t v = 0;
      const auto f = fields[i];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
        throw InputError(at + "field " + std::to_string(i + 1) + " \"" + std::string(f) +
                         "\" is not a non-negative integer");
      }
      c.counts.push_back(v);
    }
    if (width == 0) width = c.counts.size();
    if (c.counts.size() != width) {
      throw InputError(at + std::to_string(c.counts.size()) + " counts, earlier rows have " +
                       std::to_string(width));
    }
    if (c.n_trials() == 0) throw InputError(at + "all counts are zero");
    if (!table.emplace(b, std::move(c)).second) {
      throw InputError(at + "command \"" + b.bits() + "\" repeated");
    }
  });
  if (table.empty()) throw InputError("counts file has no rows");
  return table;
}

std::string serialize_counts(const CountsTable& table) {
  std::string out;
  for (const auto& [b, c] : table) {
    out += b.bits();
    for (auto v : c.counts) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

CountsTable read_counts_file(const std::filesystem::path& path) {
  const auto text = slurp(path, "counts file");
  try {
    return parse_counts(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_counts_file(const CountsTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write counts file " + path.string());
  out << serialize_counts(table);
}

std::vector<Command> parse_command_list(std::string_view text) {
  std::vector<Command> out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    try {
      out.push_back(line == "\"\"" ? Command{} : Command::parse(line));
    } catch (const InputError& e) {
      throw InputError("command list line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  return out;
}

std::vector<Command> read_command_list_file(const std::filesystem::path& path) {
  return parse_command_list(slurp(path, "command list"));
}

}  // namespace cpcq
