#include "search_engine.hpp"

namespace rainbow::search {

SearchOutcome search_rainbow_free_serial(const SearchConfig& config, int ap_length) {
  validate(config, ap_length);
  const auto started = detail::Clock::now();
  const ApTable table = build_ap_table(config.n, ap_length);
  const detail::AffineMaps maps = config.symmetry == SymmetryLevel::FullCanonical
                                      ? detail::build_affine_maps(config.n)
                                      : detail::AffineMaps{config.n, 0, {}};
  const detail::Shared shared{table, maps, config.n, config.k, config.symmetry};

  detail::Engine engine(shared, config.budget.max_nodes, detail::deadline_for(config.budget));
  const detail::Result r = engine.run(0);
  std::optional<Coloring> cert;
  if (r == detail::Result::Found) cert = detail::certificate_of(engine, config.k);
  return detail::finish(r, engine.stats(), std::move(cert), started);
}

}  // namespace rainbow::search
