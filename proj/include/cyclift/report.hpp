#pragma once

#include <string>

#include <json.hpp>

#include "cyclift/cycles.hpp"

namespace cyclift {

/// Human-readable report: scenario echo, branch, one block per check,
/// overall verdict. Deterministic for identical input.
std::string render_text(const std::string& label, const Scenario& s, const PipelineReport& r);

/// Same content as render_text with a fixed key order.
nlohmann::ordered_json render_json(const std::string& label, const Scenario& s, const PipelineReport& r);

/// A single check (check-cycle) in both shapes.
std::string render_text(const Check& c);
nlohmann::ordered_json render_json(const Check& c);

}  // namespace cyclift
