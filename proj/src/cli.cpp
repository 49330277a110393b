#include "rainbow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rainbow/constructions.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/io.hpp"

namespace rainbow::cli {

using nlohmann::json;

json outcome_to_json(const search::SearchOutcome& outcome) {
  json out{{"status", std::string(search::to_string(outcome.status))},
           {"stats",
            {{"nodes", outcome.stats.nodes},
             {"prunes_capacity", outcome.stats.prunes_capacity},
             {"prunes_rainbow", outcome.stats.prunes_rainbow},
             {"canonical_rejects", outcome.stats.canonical_rejects},
             {"elapsed_ms", outcome.stats.elapsed_ms}}}};
  if (outcome.certificate) out["certificate"] = io::coloring_to_json(*outcome.certificate);
  return out;
}

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

struct ColoringInput {
  std::string path;
  std::string topology;
  int k = 0;
  CLI::Option* topology_opt = nullptr;
  CLI::Option* k_opt = nullptr;

  void attach(CLI::App* sub) {
    sub->add_option("--input", path, "Coloring file (text or JSON); stdin when omitted");
    topology_opt = sub->add_option("--topology", topology, "interval or cyclic (text input)")
                       ->check(CLI::IsMember({"interval", "cyclic"}));
    k_opt = sub->add_option("--k", k, "Number of colors (text input)")->check(CLI::Range(1, kMaxColors));
  }

  Coloring read(std::istream& in) const {
    const std::string text = slurp(path, in);
    std::optional<Topology> t;
    if (topology_opt->count()) t = io::parse_topology(topology);
    const bool is_json = text.find('{') != std::string::npos;
    if (!t && !is_json) t = Topology::Interval;
    std::optional<int> arity;
    if (k_opt->count()) arity = k;
    return io::read_coloring(text, t, arity);
  }
};

json parse_param_value(const std::string& raw) {
  try {
    return json::parse(raw);
  } catch (const json::exception&) {
    return raw;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rainbow arithmetic progression toolkit", "rainbow"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Print a rainbow-free construction");
  int c_n = 0;
  int c_k = 4;
  std::string c_variant = "default";
  std::string c_family = "interval";
  std::string c_format = "text";
  auto* c_n_opt = construct->add_option("--n", c_n, "Ground set size");
  auto* c_k_opt = construct->add_option("--k", c_k, "Number of colors (interval family)");
  auto* c_variant_opt = construct->add_option("--variant", c_variant, "default, alt41 or star (k = 4)")
                            ->check(CLI::IsMember({"default", "alt41", "star"}));
  construct->add_option("--family", c_family, "interval, pow3 or z24")
      ->check(CLI::IsMember({"interval", "pow3", "z24"}));
  construct->add_option("--format", c_format)->check(CLI::IsMember({"text", "json"}));

  // check
  auto* check = app.add_subcommand("check", "Look for rainbow APs in a coloring");
  ColoringInput check_input;
  check_input.attach(check);
  int ch_ap = 0;
  auto* ch_ap_opt = check->add_option("--ap", ch_ap, "AP length (default: k)")->check(CLI::Range(3, kMaxColors));
  auto* list_all = check->add_flag("--list-all", "Print every rainbow AP");
  auto* expect_free = check->add_flag("--expect-free", "Exit 1 if a rainbow AP exists");
  list_all->excludes(expect_free);

  // search
  auto* search_cmd = app.add_subcommand("search", "Search Z_n for a rainbow-free equinumerous coloring");
  search::SearchConfig config;
  int s_ap = 0;
  std::uint64_t s_budget = 0;
  long long s_time_ms = 0;
  std::string s_symmetry = "value";
  std::string cert_out;
  search_cmd->add_option("--n", config.n, "Modulus")->required();
  search_cmd->add_option("--k", config.k, "Number of colors")->check(CLI::Range(1, kMaxColors));
  auto* s_ap_opt = search_cmd->add_option("--ap", s_ap, "AP length (default: k)")->check(CLI::Range(3, kMaxColors));
  auto* s_budget_opt = search_cmd->add_option("--budget", s_budget, "Node limit");
  search_cmd->add_option("--time-limit-ms", s_time_ms, "Wall-clock limit")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--symmetry", s_symmetry, "none, value or full")
      ->check(CLI::IsMember({"none", "value", "full"}));
  search_cmd->add_option("--threads", config.threads, "Worker threads")->check(CLI::Range(1, 1024));
  search_cmd->add_option("--cert-out", cert_out, "Write a found certificate here (text format)");

  // verify-suite
  auto* verify = app.add_subcommand("verify-suite", "Run a named verification suite");
  std::string suite;
  std::vector<std::string> params;
  harness::RunOptions run_options;
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(harness::suite_names()));
  verify->add_option("--param", params, "key=value (value parsed as JSON when possible)");
  verify->add_option("--threads", run_options.threads, "Worker threads")->check(CLI::Range(1, 1024));

  // canon
  auto* canon = app.add_subcommand("canon", "Print the canonical orbit representative");
  ColoringInput canon_input;
  canon_input.attach(canon);
  std::string canon_format = "text";
  canon->add_option("--format", canon_format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      std::optional<Coloring> c;
      if (c_family == "interval") {
        if (!c_n_opt->count()) throw UsageError("construct --family interval needs --n");
        if (c_k == 4) {
          c = constructions::construct_interval4(c_n, constructions::parse_variant(c_variant));
        } else {
          if (c_variant_opt->count() && c_variant != "default") {
            throw UsageError("--variant applies to k = 4 only");
          }
          c = constructions::construct_k(c_k, c_n);
        }
      } else {
        if (c_k_opt->count() || c_variant_opt->count()) {
          throw UsageError("--k and --variant apply to the interval family only");
        }
        if (c_family == "pow3") {
          if (!c_n_opt->count()) throw UsageError("construct --family pow3 needs --n");
          c = constructions::construct_pow3(c_n);
        } else {
          const int n = c_n_opt->count() ? c_n : 24;
          if (n < 24 || n % 24 != 0) throw UsageError("z24 family needs --n a positive multiple of 24");
          c = constructions::tile(constructions::construct_z24(), n / 24);
        }
      }
      if (c_format == "json") {
        out << io::coloring_to_json(*c).dump() << "\n";
      } else {
        out << c->letters() << "\n";
      }
      return kExitOk;
    }

    if (check->parsed()) {
      const Coloring c = check_input.read(in);
      const int length = ch_ap_opt->count() ? ch_ap : c.arity();
      if (list_all->count()) {
        json all = json::array();
        for (const auto& w : enumerate_rainbow_aps(c, length)) all.push_back(io::witness_to_json(w));
        out << all.dump() << "\n";
        return kExitOk;
      }
      const auto w = find_rainbow_ap(c, length);
      if (!w) {
        out << "no rainbow AP(" << length << ")\n";
        return kExitOk;
      }
      out << io::witness_to_json(*w).dump() << "\n";
      return expect_free->count() ? kExitFail : kExitOk;
    }

    if (search_cmd->parsed()) {
      const int length = s_ap_opt->count() ? s_ap : config.k;
      config.symmetry = search::parse_symmetry(s_symmetry);
      if (s_budget_opt->count()) config.budget.max_nodes = s_budget;
      config.budget.max_time = std::chrono::milliseconds(s_time_ms);
      const auto outcome = search::search_rainbow_free(config, length);
      if (outcome.certificate && !cert_out.empty()) {
        std::ofstream file(cert_out);
        if (!file) throw UsageError("cannot write '" + cert_out + "'");
        file << outcome.certificate->letters() << "\n";
      }
      out << outcome_to_json(outcome).dump() << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      json given = json::object();
      for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + kv + "'");
        given[kv.substr(0, eq)] = parse_param_value(kv.substr(eq + 1));
      }
      const auto report = harness::run_suite(suite, given, run_options);
      out << harness::to_json(report).dump() << "\n";
      return report.pass ? kExitOk : kExitFail;
    }

    if (canon->parsed()) {
      const Coloring c = canonical_form(canon_input.read(in));
      if (canon_format == "json") {
        out << io::coloring_to_json(c).dump() << "\n";
      } else {
        out << c.letters() << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rainbow::cli
