// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/core.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;
using nlohmann::json;

namespace {

struct Verdict {
  bool pass;
  std::string note;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds);
  return buf;
}

Verdict suite_within(const char* name, const json& params, double limit_s) {
  const auto t0 = Clock::now();
  const auto r = harness::run_suite(name, params);
  const double s = seconds_since(t0);
  const bool ok = r.pass && r.counterexamples.empty() && s < limit_s;
  return {ok, std::to_string(r.cases) + " cases, " + std::to_string(r.counterexamples.size()) +
                  " counterexamples, " + fmt(s) + " (limit " + fmt(limit_s) + ")"};
}

search::SearchConfig cfg(int n, search::SymmetryLevel level, int threads = 1) {
  search::SearchConfig c;
  c.n = n;
  c.k = 4;
  c.symmetry = level;
  c.threads = threads;
  return c;
}

bool identical(const search::SearchOutcome& a, const search::SearchOutcome& b) {
  return a.status == b.status && a.stats.same_counts(b.stats) && a.certificate == b.certificate;
}

Verdict c1() { return suite_within("thm1.1", {{"max_n", 2048}}, 60); }

Verdict c2() { return suite_within("thm1.2", {{"k_max", 8}, {"n_max", 40}}, 60); }

Verdict c3() {
  const auto t0 = Clock::now();
  const auto r = harness::run_suite("k3-positive", {{"n_max", 5}});
  const double s = seconds_since(t0);
  const json expected = {{"2", 90}, {"3", 1680}, {"4", 34650}, {"5", 756756}};
  bool counts_ok = true;
  for (const auto& [n, count] : expected.items()) {
    counts_ok &= search::equinumerous_count(3 * std::stoi(n), 3) == count.get<std::uint64_t>();
  }
  const bool ok = r.pass && r.counterexamples.empty() && counts_ok &&
                  r.cases == 90 + 1680 + 34650 + 756756 && s < 120;
  return {ok, std::to_string(r.cases) + " colorings, " + fmt(s) + " (limit 120.00s)"};
}

Verdict c4() {
  const auto t0 = Clock::now();
  const auto r = harness::run_suite("z8");
  bool d3 = true;
  for (const auto& letters : harness::z8_regression_colorings()) {
    const auto c = make_coloring(Topology::Cyclic, 4, letters);
    bool any = false;
    for (const auto& w : enumerate_rainbow_aps(c, 4)) any |= w.spec.d == 3;
    d3 &= any;
  }
  const double s = seconds_since(t0);
  return {r.pass && d3 && s < 1.0, std::to_string(r.cases) + " checks, nine d=3 witnesses " +
                                        (d3 ? "present" : "missing") + ", " + fmt(s) + " (limit 1.00s)"};
}

Verdict c5() {
  const auto t0 = Clock::now();
  const auto z = constructions::construct_z24();
  bool ok = classify_balance(z) == BalanceClass::Equinumerous;
  for (auto count : color_counts(z)) ok &= count == 6;
  for (int r = 0; r < 24; ++r) ok &= z.at(r) != z.at((r + 1) % 24);
  ok &= !find_rainbow_ap(z, 4);
  ok &= !oracle::cyclic_rainbow(z.letters(), 4);
  for (int times : {2, 3}) ok &= !find_rainbow_ap(constructions::tile(z, times), 4);
  const double s = seconds_since(t0);
  return {ok && s < 1.0, "Z_24, Z_48, Z_72 checked, " + fmt(s) + " (limit 1.00s)"};
}

Verdict c6() {
  const auto interval = make_coloring(Topology::Interval, 4, "ABCCDDAB");
  const bool free_interval = !find_rainbow_ap(interval, 4) && !oracle::interval_rainbow("ABCCDDAB", 4);
  const auto cyclic = to_cyclic(interval);
  const auto w = find_rainbow_ap(cyclic, 4);
  const auto naive = oracle::cyclic_rainbow(cyclic.letters(), 4);
  const bool ok = free_interval && w && w->spec.d == 3 && naive && naive->second == 3;
  return {ok, w ? "Z_8 witness start " + std::to_string(w->spec.start) + " d " + std::to_string(w->spec.d)
                : "no Z_8 witness"};
}

Verdict c7() {
  const auto t0 = Clock::now();
  const auto r = harness::run_suite("pow3", {{"max_n", 2187}});
  bool colors_ok = true;
  for (int n = 1; n <= 2187; ++n) {
    const int expected = static_cast<int>(std::floor(std::log(n) / std::log(3.0) + 1e-9)) + 1;
    colors_ok &= constructions::pow3_color_count(n) == expected;
    if (n % 243 == 0 || n == 2187) colors_ok &= constructions::construct_pow3(n).arity() == expected;
  }
  const double s = seconds_since(t0);
  return {r.pass && colors_ok && s < 5.0, std::to_string(r.cases) + " lengths, " + fmt(s) + " (limit 5.00s)"};
}

Verdict c8() {
  using search::SearchStatus;
  using search::SymmetryLevel;
  std::string note;
  bool ok = true;

  const auto z8 = search::search_rainbow_free(cfg(8, SymmetryLevel::ValueOrder), 4);
  ok &= z8.status == SearchStatus::Exhausted;
  note += "(a) Z_8 " + std::string(search::to_string(z8.status));

  const auto census = search::census_orbits(8, 4);
  ok &= census.orbit_sum == 2520;
  note += "; (b) " + std::to_string(census.classes) + " classes, orbit sum " + std::to_string(census.orbit_sum);

  bool agree = true;
  for (int n : {4, 8}) {
    agree &= search::search_rainbow_free(cfg(n, SymmetryLevel::None), 4).status ==
             search::search_rainbow_free(cfg(n, SymmetryLevel::ValueOrder), 4).status;
  }
  ok &= agree;
  note += agree ? "; (c) agree" : "; (c) disagree";

  bool certs = true;
  for (int n : {12, 16, 20, 24}) {
    for (auto level : {SymmetryLevel::ValueOrder, SymmetryLevel::FullCanonical}) {
      const auto o = search::search_rainbow_free(cfg(n, level, 8), 4);
      if (o.certificate) certs &= search::verify_certificate(*o.certificate, 4);
    }
  }
  ok &= certs;
  note += certs ? "; (d) certificates verify" : "; (d) certificate rejected";

  bool same = true;
  for (int n : {8, 16, 24}) {
    for (auto level : {SymmetryLevel::None, SymmetryLevel::ValueOrder, SymmetryLevel::FullCanonical}) {
      if (n == 24 && level == SymmetryLevel::None) continue;
      same &= identical(search::search_rainbow_free(cfg(n, level, 1), 4),
                        search::search_rainbow_free(cfg(n, level, 8), 4));
    }
  }
  ok &= same;
  note += same ? "; (e) 1 vs 8 workers identical" : "; (e) 1 vs 8 workers differ";

  const auto t0 = Clock::now();
  auto z16 = cfg(16, SymmetryLevel::FullCanonical, 8);
  z16.budget.max_time = std::chrono::minutes(15);
  const auto o = search::search_rainbow_free(z16, 4);
  const bool decided = o.status != SearchStatus::BudgetExceeded;
  ok &= decided;
  note += "; (f) Z_16 " + std::string(search::to_string(o.status)) + " after " +
          std::to_string(o.stats.nodes) + " nodes in " + fmt(seconds_since(t0));
  if (o.certificate) note += ", certificate " + o.certificate->letters();
  return {ok, note};
}

Verdict c9() {
  bool ok = true;
  std::string differing;
  const std::vector<std::pair<const char*, json>> runs = {
      {"thm1.1", json::object()},      {"thm1.2", json::object()}, {"k3-positive", json::object()},
      {"z8", json::object()},          {"z24", json::object()},    {"pow3", json::object()},
      {"open-q", json::object()}};
  for (const auto& [name, params] : runs) {
    const auto a = harness::reproducible_json(harness::run_suite(name, params)).dump();
    const auto b = harness::reproducible_json(harness::run_suite(name, params)).dump();
    if (a != b) {
      ok = false;
      differing += std::string(" ") + name;
    }
  }
  return {ok, ok ? "7 suites reproduced" : "differs:" + differing};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"1 interval AP(4)-free construction, n <= 2048", c1},
      {"2 k-color constructions, k = 5..8", c2},
      {"3 every equinumerous 3-coloring of [3n] has a rainbow AP(3), n = 2..5", c3},
      {"4 every equinumerous 4-coloring of Z_8 has a rainbow AP(4)", c4},
      {"5 Z_24 coloring and its tiles", c5},
      {"6 interval vs cyclic contrast on ABCCDDAB", c6},
      {"7 powers-of-3 coloring, n <= 2187", c7},
      {"8 search engine soundness", c8},
      {"9 suite reports are reproducible", c9},
  };
  int failures = 0;
  for (const auto& [label, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("%s  criterion %s: %s\n", v.pass ? "PASS" : "FAIL", label, v.note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
