#include "cyclift/report.hpp"

#include <sstream>

#include "cyclift/scenario_file.hpp"

namespace cyclift {

std::string render_text(const Check& c) {
  std::string out = std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.name + "\n";
  for (const auto& w : c.witnesses) out += "    " + w + "\n";
  return out;
}

nlohmann::ordered_json render_json(const Check& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["witnesses"] = c.witnesses;
  return j;
}

std::string render_text(const std::string& label, const Scenario& s, const PipelineReport& r) {
  std::string out = "scenario: " + label + "\n";
  std::stringstream echo(format_scenario(s));
  for (std::string line; std::getline(echo, line);) out += "  " + line + "\n";
  out += "branch: " + to_string(r.branch) + " (" + r.reason + ")\n";
  out += "lifting order: " + std::to_string(r.order) + "\n";
  for (const auto& c : r.checks) out += render_text(c);
  out += std::string("overall: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

nlohmann::ordered_json render_json(const std::string& label, const Scenario& s, const PipelineReport& r) {
  nlohmann::ordered_json j;
  j["scenario"] = label;
  nlohmann::ordered_json echo;
  std::stringstream lines(format_scenario(s));
  for (std::string line; std::getline(lines, line);) {
    const auto colon = line.find(':');
    echo[line.substr(0, colon)] = line.substr(colon + 2);
  }
  j["input"] = echo;
  j["branch"] = to_string(r.branch);
  j["reason"] = r.reason;
  j["order"] = r.order;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(render_json(c));
  j["overall"] = r.passed();
  return j;
}

}  // namespace cyclift
