#include <limits>

#include "search_engine.hpp"

namespace rainbow::search {

OrbitCensus census_orbits(int n, int k) {
  detail::validate_shape(n, k, 3);
  if (k > 12) throw Error(ErrorCode::InvalidParams, "census supports k <= 12");

  const ApTable table = build_ap_table(n, 3);
  const detail::AffineMaps maps = detail::build_affine_maps(n);
  const detail::Shared shared{table, maps, n, k, SymmetryLevel::FullCanonical,
                              /*prune_rainbow=*/false};

  std::uint64_t permutations = 1;
  for (int i = 2; i <= k; ++i) permutations *= static_cast<std::uint64_t>(i);
  const std::uint64_t group_order = (maps.count + 1) * permutations;

  OrbitCensus census;
  detail::Engine engine(shared, std::numeric_limits<std::uint64_t>::max(), std::nullopt);
  engine.set_leaf_sink([&](const detail::Engine& e) {
    ++census.classes;
    census.orbit_sum += group_order / e.stabilizer_size();
  });
  engine.run(0);
  census.nodes = engine.stats().nodes;
  return census;
}

}  // namespace rainbow::search
