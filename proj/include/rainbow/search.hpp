#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow::search {

enum class SymmetryLevel { None, ValueOrder, FullCanonical };

std::string_view to_string(SymmetryLevel s);
SymmetryLevel parse_symmetry(std::string_view name);

struct Budget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  // Zero means no wall-clock limit. A time-limited run is the one case where
  // the outcome may depend on machine speed.
  std::chrono::milliseconds max_time{0};
};

struct SearchConfig {
  int n = 0;
  int k = 4;
  Budget budget;
  SymmetryLevel symmetry = SymmetryLevel::ValueOrder;
  int threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes_capacity = 0;
  std::uint64_t prunes_rainbow = 0;
  std::uint64_t canonical_rejects = 0;
  std::int64_t elapsed_ms = 0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    prunes_capacity += o.prunes_capacity;
    prunes_rainbow += o.prunes_rainbow;
    canonical_rejects += o.canonical_rejects;
    return *this;
  }

  // Equality ignoring elapsed time.
  bool same_counts(const SearchStats& o) const {
    return nodes == o.nodes && prunes_capacity == o.prunes_capacity &&
           prunes_rainbow == o.prunes_rainbow && canonical_rejects == o.canonical_rejects;
  }
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

std::string_view to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Coloring> certificate;
  SearchStats stats;
};

// Throws NotDivisible unless k | n, and InvalidParams for n < 1 or k out of
// range.
void validate(const SearchConfig& config, int ap_length);

// n! / ((n/k)!)^k; throws InvalidParams when it does not fit in 64 bits.
std::uint64_t equinumerous_count(int n, int k);

// Visits equinumerous assignments (slot order, colors as indices) in
// lexicographic order, stopping after `limit` of them. Returns the number
// visited.
std::uint64_t enumerate_equinumerous(
    int n, int k, std::optional<std::uint64_t> limit = std::nullopt,
    const std::function<void(std::span<const std::uint8_t>)>& visit = {});

struct ExhaustiveResult {
  bool all_contain = true;
  std::optional<Coloring> counterexample;  // lexicographically first
  std::uint64_t nodes = 0;
};

// Whether every equinumerous k-coloring of Z_n contains a cyclic rainbow
// AP(ap_length). Lexicographic backtracking that only cuts a prefix once one
// of its fully assigned APs (resolved through core::ap_members) is rainbow.
ExhaustiveResult all_contain_rainbow(int n, int k, int ap_length);

// Pruned DFS over equinumerous colorings of Z_n, split across OpenMP
// workers. Outcome and stats are identical to the serial reference for every
// thread count.
SearchOutcome search_rainbow_free(const SearchConfig& config, int ap_length);

// Single-threaded reference DFS.
SearchOutcome search_rainbow_free_serial(const SearchConfig& config, int ap_length);

// Equinumerous, cyclic, and free of rainbow AP(ap_length), checked through
// core only.
bool verify_certificate(const Coloring& c, int ap_length);

struct OrbitCensus {
  std::uint64_t classes = 0;
  std::uint64_t orbit_sum = 0;
  std::uint64_t nodes = 0;
};

// Walks canonical representatives (FullCanonical, no rainbow pruning) of the
// equinumerous k-colorings of Z_n and sums their orbit sizes under the
// affine-times-permutation group.
OrbitCensus census_orbits(int n, int k);

// Distinct cyclic AP member sets of Z_n bucketed by their largest residue.
// Reversed progressions share a member set and are stored once.
struct ApTable {
  int n = 0;
  int length = 0;
  // others[p] holds (length - 1) residues per AP, all < p.
  std::vector<std::vector<int>> others;

  std::size_t aps_ending_at(int p) const { return others[p].size() / (length - 1); }
};

ApTable build_ap_table(int n, int length);

// Rule (b): with slots 0..p assigned, whether some AP whose largest member is
// p is rainbow.
bool closes_rainbow(const ApTable& table, std::span<const std::uint8_t> assigned, int p);

}  // namespace rainbow::search
