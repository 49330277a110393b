#include "rainbow/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <set>

#include <omp.h>

#include "rainbow/constructions.hpp"
#include "rainbow/core.hpp"
#include "rainbow/io.hpp"
#include "rainbow/search.hpp"

namespace rainbow::harness {

using nlohmann::json;

namespace {

using CaseResult = std::optional<Counterexample>;

int thread_count(const RunOptions& options) {
  return options.threads > 0 ? options.threads : omp_get_max_threads();
}

// Runs check(i) for i in [0, count) across threads and keeps failures in
// case order, so the report does not depend on scheduling.
std::vector<Counterexample> run_cases(std::size_t count, const RunOptions& options,
                                      const std::function<CaseResult(std::size_t)>& check) {
  std::vector<CaseResult> results(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(options))
  for (std::int64_t i = 0; i < n; ++i) results[i] = check(static_cast<std::size_t>(i));
  std::vector<Counterexample> out;
  for (auto& r : results) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

class Params {
 public:
  Params(const json& given, std::string_view suite) : given_(given), suite_(suite) {
    if (!given_.is_object()) throw Error(ErrorCode::InvalidParams, "params must be an object");
  }

  int integer(const std::string& key, int fallback, int lo, int hi) {
    used_.insert(key);
    int value = fallback;
    if (given_.contains(key)) {
      const auto& v = given_[key];
      if (!v.is_number_integer()) throw Error(ErrorCode::InvalidParams, key + " must be an integer");
      const auto raw = v.get<long long>();
      if (raw < lo || raw > hi) {
        throw Error(ErrorCode::InvalidParams, std::string(suite_) + ": " + key + " = " +
                                                  std::to_string(raw) + " outside [" +
                                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
      value = static_cast<int>(raw);
    }
    effective_[key] = value;
    return value;
  }

  bool boolean(const std::string& key, bool fallback) {
    used_.insert(key);
    bool value = fallback;
    if (given_.contains(key)) {
      if (!given_[key].is_boolean()) throw Error(ErrorCode::InvalidParams, key + " must be a boolean");
      value = given_[key].get<bool>();
    }
    effective_[key] = value;
    return value;
  }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    std::string value = fallback;
    if (given_.contains(key)) {
      if (!given_[key].is_string()) throw Error(ErrorCode::InvalidParams, key + " must be a string");
      value = given_[key].get<std::string>();
    }
    effective_[key] = value;
    return value;
  }

  std::vector<int> integer_list(const std::string& key, std::vector<int> fallback, int lo, int hi) {
    used_.insert(key);
    std::vector<int> value = std::move(fallback);
    if (given_.contains(key)) {
      const auto& v = given_[key];
      value.clear();
      if (!v.is_array() || v.empty()) {
        throw Error(ErrorCode::InvalidParams, key + " must be a non-empty integer list");
      }
      for (const auto& item : v) {
        if (!item.is_number_integer()) throw Error(ErrorCode::InvalidParams, key + " must hold integers");
        const auto raw = item.get<long long>();
        if (raw < lo || raw > hi) {
          throw Error(ErrorCode::InvalidParams, key + " entry " + std::to_string(raw) + " out of range");
        }
        value.push_back(static_cast<int>(raw));
      }
    }
    effective_[key] = value;
    return value;
  }

  // Rejects keys the suite does not understand.
  json finish() const {
    for (const auto& [key, _] : given_.items()) {
      if (!used_.count(key)) {
        throw Error(ErrorCode::InvalidParams, std::string(suite_) + " has no parameter '" + key + "'");
      }
    }
    return effective_;
  }

 private:
  const json& given_;
  std::string_view suite_;
  std::set<std::string> used_;
  json effective_ = json::object();
};

json interval_input(const Coloring& c, json extra) {
  extra["coloring"] = io::coloring_to_json(c);
  return extra;
}

Counterexample rainbow_failure(json input, const APWitness& w, std::string reason) {
  return Counterexample{std::move(input), io::witness_to_json(w), std::move(reason)};
}

Counterexample plain_failure(json input, std::string reason) {
  return Counterexample{std::move(input), nullptr, std::move(reason)};
}

// Every class in {floor(n/k), ceil(n/k)}, and equal sizes exactly when k | n.
std::optional<std::string> near_equal_classes(const Coloring& c) {
  const auto counts = color_counts(c);
  const std::size_t n = c.size();
  const std::size_t k = c.arity();
  const std::size_t lo = n / k;
  const std::size_t hi = (n + k - 1) / k;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < lo || counts[i] > hi) {
      return "class " + std::string(1, static_cast<char>('A' + i)) + " has size " +
             std::to_string(counts[i]);
    }
  }
  const bool equal = classify_balance(c) == BalanceClass::Equinumerous;
  if (equal != (n % k == 0)) return "equinumerosity does not match divisibility of n by k";
  return std::nullopt;
}

Report thm11(Params& p, const RunOptions& options) {
  const int max_n = p.integer("max_n", 512, 8, 16384);
  Report report;
  report.params = p.finish();

  std::vector<std::pair<int, constructions::Variant>> cases;
  for (int n = 8; n <= max_n; ++n) {
    for (auto v : constructions::valid_variants(n)) cases.emplace_back(n, v);
  }
  report.cases = cases.size();
  report.counterexamples = run_cases(cases.size(), options, [&](std::size_t i) -> CaseResult {
    const auto [n, variant] = cases[i];
    const Coloring c = constructions::construct_interval4(n, variant);
    const json input = interval_input(
        c, json{{"n", n}, {"variant", std::string(constructions::to_string(variant))}});
    if (auto w = find_rainbow_ap(c, 4)) return rainbow_failure(input, *w, "rainbow AP(4)");
    if (auto why = near_equal_classes(c)) return plain_failure(input, *why);
    return std::nullopt;
  });
  return report;
}

Report thm12(Params& p, const RunOptions& options) {
  const int k_max = p.integer("k_max", 8, 5, kMaxColors);
  const int n_max = p.integer("n_max", 40, 2, 400);
  Report report;
  report.params = p.finish();

  struct Case {
    int k, q, r;
  };
  std::vector<Case> cases;
  for (int k = 5; k <= k_max; ++k) {
    for (int q = 2; q <= n_max; ++q) {
      for (int r = 0; r <= k - 1; ++r) cases.push_back({k, q, r});
    }
  }
  report.cases = cases.size();
  report.counterexamples = run_cases(cases.size(), options, [&](std::size_t i) -> CaseResult {
    const auto [k, q, r] = cases[i];
    const int N = k * q + r;
    const Coloring c = constructions::construct_k(k, N);
    const json input = interval_input(c, json{{"k", k}, {"N", N}, {"r", r}});
    if (auto w = find_rainbow_ap(c, k)) return rainbow_failure(input, *w, "rainbow AP(k)");
    const auto counts = color_counts(c);
    if (std::count(counts.begin(), counts.end(), 0u) != 0) {
      return plain_failure(input, "not all k colors used");
    }
    const auto balance = classify_balance(c);
    if (balance != BalanceClass::Equinumerous && balance != BalanceClass::NearEquinumerous) {
      return plain_failure(input, "class sizes differ by more than one");
    }
    const int base_len = constructions::construct_k_base_length(k, N);
    const Coloring base = constructions::construct_k(k - 1, base_len);
    if (!std::equal(base.slots().begin(), base.slots().end(), c.slots().begin())) {
      return plain_failure(input, "prefix is not the (k-1)-color construction");
    }
    return std::nullopt;
  });
  return report;
}

bool interval_slots_have_rainbow3(std::span<const std::uint8_t> s) {
  const int n = static_cast<int>(s.size());
  for (int d = 1; 2 * d < n; ++d) {
    for (int i = 0; i + 2 * d < n; ++i) {
      const auto a = s[i], b = s[i + d], c = s[i + 2 * d];
      if (a != b && b != c && a != c) return true;
    }
  }
  return false;
}

Report k3_positive(Params& p, const RunOptions& options) {
  const bool allow_large = p.boolean("allow_large", false);
  const int n_max = p.integer("n_max", 5, 2, 6);
  Report report;
  report.params = p.finish();
  if (n_max == 6 && !allow_large) {
    throw Error(ErrorCode::InvalidParams, "n_max = 6 (17.1M colorings) needs allow_large = true");
  }

  constexpr std::size_t kBatch = 1 << 16;
  json per_n = json::array();
  for (int n = 2; n <= n_max; ++n) {
    const int len = 3 * n;
    std::vector<std::uint8_t> batch;
    batch.reserve(kBatch * len);
    std::optional<Counterexample> first;

    auto flush = [&] {
      const std::size_t count = batch.size() / len;
      std::vector<char> bad(count, 0);
      const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) num_threads(thread_count(options))
      for (std::int64_t i = 0; i < total; ++i) {
        bad[i] = !interval_slots_have_rainbow3(std::span(batch).subspan(i * len, len));
      }
      for (std::size_t i = 0; i < count && !first; ++i) {
        if (!bad[i]) continue;
        Coloring c(Topology::Interval, 3,
                   std::vector<std::uint8_t>(batch.begin() + i * len, batch.begin() + (i + 1) * len));
        first = plain_failure(interval_input(c, json{{"n", n}}), "no rainbow AP(3)");
      }
      batch.clear();
    };

    const auto visited = search::enumerate_equinumerous(
        len, 3, std::nullopt, [&](std::span<const std::uint8_t> s) {
          batch.insert(batch.end(), s.begin(), s.end());
          if (batch.size() == kBatch * len) flush();
        });
    flush();
    report.cases += visited;
    per_n.push_back(json{{"n", n}, {"colorings", visited}});
    if (first) report.counterexamples.push_back(std::move(*first));
  }
  report.details = json{{"per_n", per_n}};
  return report;
}

Report z8(Params& p, const RunOptions& options) {
  Report report;
  report.params = p.finish();

  std::vector<std::vector<std::uint8_t>> all;
  search::enumerate_equinumerous(8, 4, std::nullopt, [&](std::span<const std::uint8_t> s) {
    all.emplace_back(s.begin(), s.end());
  });
  report.counterexamples = run_cases(all.size(), options, [&](std::size_t i) -> CaseResult {
    const Coloring c(Topology::Cyclic, 4, all[i]);
    if (find_rainbow_ap(c, 4)) return std::nullopt;
    return plain_failure(json{{"coloring", io::coloring_to_json(c)}}, "no cyclic rainbow AP(4)");
  });

  const auto exhaustive = search::all_contain_rainbow(8, 4, 4);
  if (!exhaustive.all_contain) {
    report.counterexamples.push_back(plain_failure(
        json{{"coloring", io::coloring_to_json(*exhaustive.counterexample)}},
        "backtracking found a rainbow-free coloring"));
  }

  for (const auto& letters : z8_regression_colorings()) {
    const Coloring c = make_coloring(Topology::Cyclic, 4, letters);
    const auto aps = enumerate_rainbow_aps(c, 4);
    const bool step3 = std::any_of(aps.begin(), aps.end(),
                                   [](const APWitness& w) { return w.spec.d == 3; });
    if (!step3) {
      report.counterexamples.push_back(
          plain_failure(json{{"coloring", io::coloring_to_json(c)}}, "no rainbow AP(4) with d = 3"));
    }
  }
  report.cases = all.size() + z8_regression_colorings().size();
  report.details = json{{"equinumerous_colorings", all.size()},
                        {"backtracking_nodes", exhaustive.nodes}};
  return report;
}

Report z24(Params& p, const RunOptions& options) {
  const int max_tile = p.integer("max_tile", 3, 1, 16);
  Report report;
  report.params = p.finish();
  const Coloring base = constructions::construct_z24();
  report.cases = max_tile;
  report.counterexamples = run_cases(max_tile, options, [&](std::size_t i) -> CaseResult {
    const int times = static_cast<int>(i) + 1;
    const Coloring c = constructions::tile(base, times);
    const json input{{"tile", times}, {"coloring", io::coloring_to_json(c)}};
    if (auto w = find_rainbow_ap(c, 4)) return rainbow_failure(input, *w, "rainbow AP(4)");
    if (!search::verify_certificate(c, 4)) return plain_failure(input, "not equinumerous");
    for (int color = 0; color < 4; ++color) {
      if (!is_recessive(c, Color{static_cast<std::uint8_t>(color)})) {
        return plain_failure(input, "color " + std::string(1, static_cast<char>('A' + color)) +
                                        " sits on consecutive residues");
      }
    }
    return std::nullopt;
  });
  return report;
}

Report pow3(Params& p, const RunOptions& options) {
  const int max_n = p.integer("max_n", 2187, 1, 59049);
  Report report;
  report.params = p.finish();
  const Coloring full = constructions::construct_pow3(max_n);
  const auto slots = full.slots();

  // Each [n] is a prefix of [max_n], so checking, for every n, that the
  // construction is that prefix and that no AP(3) ending at n is rainbow
  // covers every AP of every [n].
  report.cases = max_n;
  report.counterexamples = run_cases(max_n, options, [&](std::size_t i) -> CaseResult {
    const int n = static_cast<int>(i) + 1;
    const Coloring c = constructions::construct_pow3(n);
    const json input{{"n", n}};
    if (!std::equal(c.slots().begin(), c.slots().end(), slots.begin())) {
      return plain_failure(input, "construction is not a prefix of the largest one");
    }
    const auto counts = color_counts(c);
    const auto used = static_cast<int>(counts.size() - std::count(counts.begin(), counts.end(), 0u));
    if (used != constructions::pow3_color_count(n)) {
      return plain_failure(input, "uses " + std::to_string(used) + " colors");
    }
    const int last = n - 1;
    for (int d = 1; 2 * d <= last; ++d) {
      const auto a = slots[last - 2 * d], b = slots[last - d], e = slots[last];
      if (a != b && b != e && a != e) {
        APWitness w{APSpec{n - 2 * d, d, 3}, {n - 2 * d, n - d, n}, {Color{a}, Color{b}, Color{e}}};
        return rainbow_failure(interval_input(c, input), w, "rainbow AP(3)");
      }
    }
    return std::nullopt;
  });
  if (auto w = find_rainbow_ap(full, 3)) {
    report.counterexamples.push_back(
        rainbow_failure(interval_input(full, json{{"n", max_n}}), *w, "rainbow AP(3)"));
  }
  return report;
}

Report open_questions(Params& p, const RunOptions& options) {
  const auto moduli = p.integer_list("moduli", {16}, 4, 256);
  const int k = p.integer("k", 4, 2, 8);
  const int ap = p.integer("ap", 4, 3, 8);
  const int budget = p.integer("budget_mnodes", 4000, 0, 1000000);
  const auto symmetry_name = p.text("symmetry", "full");
  search::SymmetryLevel symmetry;
  try {
    symmetry = search::parse_symmetry(symmetry_name);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidParams, "symmetry must be none, value or full");
  }
  Report report;
  report.params = p.finish();
  for (int m : moduli) {
    if (m % k != 0) throw Error(ErrorCode::InvalidParams, std::to_string(k) + " does not divide " + std::to_string(m));
  }

  json results = json::array();
  for (int m : moduli) {
    search::SearchConfig config;
    config.n = m;
    config.k = k;
    config.symmetry = symmetry;
    config.budget.max_nodes = static_cast<std::uint64_t>(budget) * 1000000u;
    config.threads = thread_count(options);
    const auto outcome = search::search_rainbow_free(config, ap);
    json entry{{"n", m},
               {"status", std::string(search::to_string(outcome.status))},
               {"nodes", outcome.stats.nodes},
               {"prunes_capacity", outcome.stats.prunes_capacity},
               {"prunes_rainbow", outcome.stats.prunes_rainbow},
               {"canonical_rejects", outcome.stats.canonical_rejects}};
    if (outcome.certificate) {
      entry["certificate"] = outcome.certificate->letters();
      if (!search::verify_certificate(*outcome.certificate, ap)) {
        json input{{"n", m}, {"coloring", io::coloring_to_json(*outcome.certificate)}};
        if (auto w = find_rainbow_ap(*outcome.certificate, ap)) {
          report.counterexamples.push_back(rainbow_failure(input, *w, "certificate is not rainbow-free"));
        } else {
          report.counterexamples.push_back(plain_failure(input, "certificate is not equinumerous"));
        }
      }
    }
    results.push_back(entry);
  }
  report.cases = moduli.size();
  report.details = json{{"results", results}};
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm1.1", "thm1.2", "k3-positive", "z8",
                                              "z24",    "pow3",   "open-q"};
  return names;
}

const std::vector<std::string>& z8_regression_colorings() {
  static const std::vector<std::string> nus{"AABBCDCD", "ADBBCACD", "ADBDCBCA",
                                            "ADCACBBD", "ADCDCBBA", "AACDCDBB",
                                            "ADCDBBCA", "AACBBDCD", "ADCABBCD"};
  return nus;
}

Report run_suite(std::string_view name, const json& params, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  Params p(params, name);
  Report report;
  if (name == "thm1.1") {
    report = thm11(p, options);
  } else if (name == "thm1.2") {
    report = thm12(p, options);
  } else if (name == "k3-positive") {
    report = k3_positive(p, options);
  } else if (name == "z8") {
    report = z8(p, options);
  } else if (name == "z24") {
    report = z24(p, options);
  } else if (name == "pow3") {
    report = pow3(p, options);
  } else if (name == "open-q") {
    report = open_questions(p, options);
  } else {
    throw Error(ErrorCode::UnknownSuite, "no suite named '" + std::string(name) + "'");
  }
  report.suite = std::string(name);
  report.pass = report.counterexamples.empty();
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started).count();
  return report;
}

json reproducible_json(const Report& r) {
  json cx = json::array();
  for (const auto& c : r.counterexamples) {
    cx.push_back(json{{"input", c.input}, {"witness", c.witness}, {"reason", c.reason}});
  }
  json out{{"suite", r.suite},
           {"params", r.params},
           {"pass", r.pass},
           {"counterexamples", cx},
           {"stats", json{{"cases", r.cases}}}};
  if (!r.details.is_null()) out["details"] = r.details;
  return out;
}

json to_json(const Report& r) {
  json out = reproducible_json(r);
  out["stats"]["elapsed_ms"] = r.elapsed_ms;
  return out;
}

}  // namespace rainbow::harness
