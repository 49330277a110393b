#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rainbow/core.hpp"

namespace rainbow::io {

// {"n":int,"k":int,"topology":"interval"|"cyclic","colors":"ABCC..."}
nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

// {"start":int,"d":int,"elements":[int],"colors":"..."}
nlohmann::json witness_to_json(const APWitness& w);

Topology parse_topology(std::string_view name);

// Accepts either the one-line letter format or the JSON object. For text
// input the topology must be supplied and k defaults to the largest letter
// seen; for JSON the explicit arguments, when given, must agree with the
// document.
Coloring read_coloring(std::string_view input, std::optional<Topology> topology,
                       std::optional<int> k);

}  // namespace rainbow::io
