#pragma once

// Group files: one group per line,
//
//   name ; degree ; gen1 ; gen2 ; ...
//
// with generators in 1-based cycle notation.  '#' starts a comment and blank
// lines are ignored.

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "realclass/families.hpp"

namespace realclass {

class GroupFileError : public std::runtime_error {
 public:
  GroupFileError(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string trim(std::string s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace detail

inline std::vector<GroupSpec> parse_group_text(const std::string& text, const std::string& source) {
  std::vector<GroupSpec> out;
  std::set<std::string> names;
  std::istringstream in(text);
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::istringstream parts(line);
    for (std::string field; std::getline(parts, field, ';');) fields.push_back(detail::trim(field));
    if (!line.empty() && line.back() == ';') fields.emplace_back();
    if (fields.size() < 2) throw GroupFileError(source, number, "expected 'name ; degree ; gens...'");

    GroupSpec spec;
    spec.name = fields[0];
    spec.source = source;
    if (spec.name.empty()) throw GroupFileError(source, number, "empty group name");
    if (!names.insert(spec.name).second)
      throw GroupFileError(source, number, "duplicate group name '" + spec.name + "'");
    const std::string& degree = fields[1];
    if (degree.empty() || degree.find_first_not_of("0123456789") != std::string::npos ||
        degree.size() > 9 || std::stoul(degree) == 0)
      throw GroupFileError(source, number, "bad degree '" + degree + "'");
    spec.degree = std::stoul(degree);
    for (std::size_t i = 2; i < fields.size(); ++i) {
      try {
        parse_cycles(fields[i], spec.degree);
      } catch (const std::exception& e) {
        throw GroupFileError(source, number, e.what());
      }
      spec.generators.push_back(fields[i]);
    }
    if (spec.generators.empty()) spec.generators.emplace_back();
    out.push_back(std::move(spec));
  }
  return out;
}

inline std::vector<GroupSpec> ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_text(buffer.str(), path);
}

inline std::string format_group_specs(const std::vector<GroupSpec>& specs) {
  std::string out;
  for (const auto& s : specs) {
    out += s.name + " ; " + std::to_string(s.degree);
    for (const auto& g : s.generators) out += " ; " + g;
    out += '\n';
  }
  return out;
}

inline void emit_group_file(const std::vector<GroupSpec>& specs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_group_specs(specs);
}

}  // namespace realclass
