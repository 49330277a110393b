#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rainbow/search.hpp"

namespace rainbow::search::detail {

// Non-identity affine maps y -> a*y + b of Z_n, flattened: image[h*n + y].
struct AffineMaps {
  int n = 0;
  std::size_t count = 0;
  std::vector<int> image;
};

AffineMaps build_affine_maps(int n);

struct Shared {
  const ApTable& table;
  const AffineMaps& maps;
  int n;
  int k;
  SymmetryLevel symmetry;
  bool prune_rainbow = true;
};

enum class Result { Exhausted, Found, Aborted };

using Clock = std::chrono::steady_clock;

// Depth-first search over slot order 0..n-1. One engine per thread; the
// shared tables are read-only.
class Engine {
 public:
  // Called at leaves in census mode; returns nothing and the search goes on.
  using LeafSink = std::function<void(const Engine&)>;
  // Replaces the subtree below `frontier_depth` when set.
  using Frontier = std::function<Result(Engine&)>;

  Engine(const Shared& shared, std::uint64_t node_limit,
         std::optional<Clock::time_point> deadline);

  // Installs a prefix of assigned slots (stats untouched).
  void load_prefix(std::span<const std::uint8_t> prefix);

  Result run(int depth) { return visit(depth); }

  void set_leaf_sink(LeafSink sink) { leaf_sink_ = std::move(sink); }
  void set_frontier(int depth, Frontier f) {
    frontier_depth_ = depth;
    frontier_ = std::move(f);
  }

  std::span<const std::uint8_t> assignment() const { return assign_; }
  const SearchStats& stats() const { return stats_; }
  SearchStats& stats() { return stats_; }
  std::uint64_t node_limit() const { return node_limit_; }
  std::optional<Clock::time_point> deadline() const { return deadline_; }

  // Number of non-identity maps that fix the full assignment after color
  // normalization; only meaningful at a canonical leaf.
  std::uint64_t stabilizer_size() const;

 private:
  Result visit(int p);
  bool prefix_canonical(int p) const;

  const Shared& shared_;
  std::uint64_t node_limit_;
  std::optional<Clock::time_point> deadline_;
  int cap_;
  std::vector<std::uint8_t> assign_;
  std::vector<int> counts_;
  int max_used_ = -1;
  SearchStats stats_;
  LeafSink leaf_sink_;
  Frontier frontier_;
  int frontier_depth_ = -1;
};

void validate_shape(int n, int k, int ap_length);

// Applies a time limit relative to now, if any.
std::optional<Clock::time_point> deadline_for(const Budget& budget);

SearchOutcome finish(Result r, const SearchStats& stats, std::optional<Coloring> certificate,
                     Clock::time_point started);

Coloring certificate_of(const Engine& engine, int k);

}  // namespace rainbow::search::detail
