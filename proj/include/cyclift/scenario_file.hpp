#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "cyclift/cycles.hpp"

namespace cyclift {

/// Problem with a scenario file. line is 1-based, 0 when no single line is
/// to blame.
class ScenarioFileError : public std::runtime_error {
 public:
  enum class Kind { MissingKey, Parse, Invariant, Io };

  ScenarioFileError(Kind kind, std::size_t line, std::string key, const std::string& what);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::string key_;
};

/// Raw key: value pairs of a scenario file, with their lines.
struct ScenarioFields {
  struct Field {
    std::size_t line;
    std::string value;
  };
  std::map<std::string, Field> fields;
};

/// Splits lines into key: value pairs; '#' starts a comment. Unknown and
/// repeated keys are parse errors.
ScenarioFields read_fields(const std::string& text);

/// Builds and validates a Scenario. Required keys: vars, p, f, fnext, order,
/// deform_g, a; b_decomp is optional. Lists are separated by '|'.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

/// key: value lines that parse back to the same scenario.
std::string format_scenario(const Scenario& s);

}  // namespace cyclift
