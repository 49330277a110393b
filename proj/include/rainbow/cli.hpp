#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/search.hpp"

namespace rainbow::cli {

// {status, certificate?, stats{nodes, prunes_capacity, prunes_rainbow,
// canonical_rejects, elapsed_ms}}
nlohmann::json outcome_to_json(const search::SearchOutcome& outcome);

// Subcommands: construct, check, search, verify-suite, canon. `args` excludes
// the program name. Exit codes: 0 success, 1 verification failure, 2 usage
// or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rainbow::cli
