#pragma once

#include <string>

#include <json.hpp>

#include "l1tv/energy.hpp"
#include "l1tv/perimeter.hpp"
#include "l1tv/solver.hpp"

namespace l1tv {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.3.1";

// {perimeter, fidelity, total, lambda, R, stencil} plus the exact integer form.
Json to_json(const EnergyReport& report);
Json to_json(const Stencil& stencil);
// Timing is left out unless asked for so that reports stay byte-reproducible.
Json to_json(const SolveResult& result, bool with_timing);

std::string_view to_string(FlowAlgorithm a);
FlowAlgorithm parse_flow_algorithm(std::string_view name);

}  // namespace l1tv
