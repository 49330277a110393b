#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rainbow::harness {

struct Counterexample {
  nlohmann::json input;    // enough to replay the case through core
  nlohmann::json witness;  // rainbow AP, or null when the failure is not one
  std::string reason;
};

struct Report {
  std::string suite;
  nlohmann::json params;  // effective parameters, defaults filled in
  bool pass = true;
  std::vector<Counterexample> counterexamples;
  std::uint64_t cases = 0;
  std::int64_t elapsed_ms = 0;
  nlohmann::json details;  // suite-specific extras; null for most suites
};

nlohmann::json to_json(const Report& r);

// Same as to_json with the timing field removed; two runs with the same
// parameters must agree on this byte for byte.
nlohmann::json reproducible_json(const Report& r);

struct RunOptions {
  int threads = 0;  // 0: OpenMP default
};

// Suites: thm1.1, thm1.2, k3-positive, z8, z24, pow3, open-q.
// Throws UnknownSuite / InvalidParams.
Report run_suite(std::string_view name, const nlohmann::json& params = nlohmann::json::object(),
                 const RunOptions& options = {});

const std::vector<std::string>& suite_names();

// The nine Z_8 regression colorings, residues 0..7.
const std::vector<std::string>& z8_regression_colorings();

}  // namespace rainbow::harness
