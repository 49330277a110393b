#include "search_engine.hpp"

#include <algorithm>
#include <array>

namespace rainbow::search::detail {

Engine::Engine(const Shared& shared, std::uint64_t node_limit,
               std::optional<Clock::time_point> deadline)
    : shared_(shared),
      node_limit_(node_limit),
      deadline_(deadline),
      cap_(shared.n / shared.k),
      assign_(shared.n, 0),
      counts_(shared.k, 0) {}

void Engine::load_prefix(std::span<const std::uint8_t> prefix) {
  std::fill(counts_.begin(), counts_.end(), 0);
  max_used_ = -1;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    assign_[i] = prefix[i];
    ++counts_[prefix[i]];
    max_used_ = std::max(max_used_, static_cast<int>(prefix[i]));
  }
}

Result Engine::visit(int p) {
  if (frontier_ && p == frontier_depth_) return frontier_(*this);
  if (stats_.nodes >= node_limit_) return Result::Aborted;
  if (deadline_ && (stats_.nodes & 1023u) == 0 && Clock::now() >= *deadline_) {
    return Result::Aborted;
  }
  ++stats_.nodes;

  const int n = shared_.n;
  if (p == n) {
    if (!leaf_sink_) return Result::Found;
    leaf_sink_(*this);
    return Result::Exhausted;
  }

  const bool value_order = shared_.symmetry != SymmetryLevel::None;
  const bool full = shared_.symmetry == SymmetryLevel::FullCanonical;
  for (int c = 0; c < shared_.k; ++c) {
    if (counts_[c] == cap_) {
      ++stats_.prunes_capacity;
      continue;
    }
    if (value_order && c > max_used_ + 1) {
      ++stats_.canonical_rejects;
      continue;
    }
    assign_[p] = static_cast<std::uint8_t>(c);
    if (shared_.prune_rainbow && closes_rainbow(shared_.table, assign_, p)) {
      ++stats_.prunes_rainbow;
      continue;
    }
    const int saved_max = max_used_;
    ++counts_[c];
    max_used_ = std::max(max_used_, c);
    if (full && !prefix_canonical(p)) {
      ++stats_.canonical_rejects;
      --counts_[c];
      max_used_ = saved_max;
      continue;
    }
    const Result r = visit(p + 1);
    if (r != Result::Exhausted) return r;
    --counts_[c];
    max_used_ = saved_max;
  }
  return Result::Exhausted;
}

// For every non-identity affine map h, compares the color-normalized
// sequence y -> assign[h(y)] with the assignment itself over the longest
// prefix both know. A strictly smaller image proves that no completion is
// the orbit's lex-least member.
bool Engine::prefix_canonical(int p) const {
  const auto& maps = shared_.maps;
  const int n = shared_.n;
  std::array<int, kMaxColors> relabel;
  for (std::size_t h = 0; h < maps.count; ++h) {
    const int* image = maps.image.data() + h * n;
    relabel.fill(-1);
    int next = 0;
    for (int y = 0; y <= p; ++y) {
      const int x = image[y];
      if (x > p) break;
      int& label = relabel[assign_[x]];
      if (label < 0) label = next++;
      if (label < assign_[y]) return false;
      if (label > assign_[y]) break;
    }
  }
  return true;
}

std::uint64_t Engine::stabilizer_size() const {
  const auto& maps = shared_.maps;
  const int n = shared_.n;
  std::uint64_t fixed = 1;  // identity
  std::array<int, kMaxColors> relabel;
  for (std::size_t h = 0; h < maps.count; ++h) {
    const int* image = maps.image.data() + h * n;
    relabel.fill(-1);
    int next = 0;
    bool equal = true;
    for (int y = 0; y < n && equal; ++y) {
      int& label = relabel[assign_[image[y]]];
      if (label < 0) label = next++;
      equal = label == assign_[y];
    }
    if (equal) ++fixed;
  }
  return fixed;
}

SearchOutcome finish(Result r, const SearchStats& stats, std::optional<Coloring> certificate,
                     Clock::time_point started) {
  SearchOutcome out;
  out.stats = stats;
  switch (r) {
    case Result::Found:
      out.status = SearchStatus::Found;
      out.certificate = std::move(certificate);
      break;
    case Result::Exhausted: out.status = SearchStatus::Exhausted; break;
    case Result::Aborted: out.status = SearchStatus::BudgetExceeded; break;
  }
  out.stats.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
  return out;
}

Coloring certificate_of(const Engine& engine, int k) {
  const auto a = engine.assignment();
  return Coloring(Topology::Cyclic, k, std::vector<std::uint8_t>(a.begin(), a.end()));
}

}  // namespace rainbow::search::detail
