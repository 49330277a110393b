#include <atomic>
#include <limits>

#include <omp.h>

#include "search_engine.hpp"

namespace rainbow::search {
namespace {

using detail::Engine;
using detail::Result;

struct TaskResult {
  bool computed = false;
  Result result = Result::Aborted;
  SearchStats stats;
  std::vector<std::uint8_t> certificate;
};

// Frontier prefixes at `depth` in DFS order, produced with the same pruning
// rules as the real search. Stats from this pass are discarded.
std::vector<std::vector<std::uint8_t>> collect_frontier(const detail::Shared& shared, int depth) {
  std::vector<std::vector<std::uint8_t>> out;
  Engine walker(shared, std::numeric_limits<std::uint64_t>::max(), std::nullopt);
  walker.set_frontier(depth, [&](Engine& e) {
    const auto a = e.assignment();
    out.emplace_back(a.begin(), a.begin() + depth);
    return Result::Exhausted;
  });
  walker.run(0);
  return out;
}

}  // namespace

// Work split: the subtrees hanging off a fixed frontier depth are searched
// speculatively in parallel, each capped at the full node budget. A serial
// replay then walks the levels above the frontier in DFS order and splices
// in each subtree's result, re-running a subtree serially whenever the
// budget that remains at that point in the replay is smaller than what the
// speculative run used. The replay therefore reproduces the serial DFS
// exactly, including where it stops.
SearchOutcome search_rainbow_free(const SearchConfig& config, int ap_length) {
  validate(config, ap_length);
  if (config.threads == 1) return search_rainbow_free_serial(config, ap_length);

  const auto started = detail::Clock::now();
  const auto deadline = detail::deadline_for(config.budget);
  const std::uint64_t budget = config.budget.max_nodes;
  const ApTable table = build_ap_table(config.n, ap_length);
  const detail::AffineMaps maps = config.symmetry == SymmetryLevel::FullCanonical
                                      ? detail::build_affine_maps(config.n)
                                      : detail::AffineMaps{config.n, 0, {}};
  const detail::Shared shared{table, maps, config.n, config.k, config.symmetry};

  const std::size_t wanted = 16 * static_cast<std::size_t>(config.threads);
  int depth = 1;
  auto frontier = collect_frontier(shared, depth);
  while (frontier.size() < wanted && depth < config.n) {
    frontier = collect_frontier(shared, ++depth);
  }

  std::vector<TaskResult> results(frontier.size());
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
  const auto task_count = static_cast<std::int64_t>(frontier.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(config.threads)
  for (std::int64_t i = 0; i < task_count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    // Subtrees after a found certificate are never spliced in.
    if (idx > first_found.load(std::memory_order_relaxed)) continue;
    Engine engine(shared, budget, deadline);
    engine.load_prefix(frontier[idx]);
    TaskResult& out = results[idx];
    out.result = engine.run(depth);
    out.stats = engine.stats();
    out.computed = true;
    if (out.result == Result::Found) {
      const auto a = engine.assignment();
      out.certificate.assign(a.begin(), a.end());
      std::size_t prev = first_found.load(std::memory_order_relaxed);
      while (idx < prev && !first_found.compare_exchange_weak(prev, idx)) {
      }
    }
  }

  std::optional<Coloring> cert;
  std::size_t next = 0;
  Engine replay(shared, budget, deadline);
  replay.set_frontier(depth, [&](Engine& e) -> Result {
    const TaskResult& task = results.at(next++);
    const std::uint64_t offset = e.stats().nodes;
    if (task.computed && task.result != Result::Aborted && offset <= budget &&
        task.stats.nodes <= budget - offset) {
      e.stats() += task.stats;
      if (task.result == Result::Found) cert = Coloring(Topology::Cyclic, config.k, task.certificate);
      return task.result;
    }
    Engine rerun(shared, budget - offset, deadline);
    rerun.load_prefix(e.assignment().first(depth));
    const Result r = rerun.run(depth);
    e.stats() += rerun.stats();
    if (r == Result::Found) cert = detail::certificate_of(rerun, config.k);
    return r;
  });
  const Result r = replay.run(0);
  return detail::finish(r, replay.stats(), std::move(cert), started);
}

}  // namespace rainbow::search
