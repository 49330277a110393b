#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "search_engine.hpp"

namespace rainbow::search {

std::string_view to_string(SymmetryLevel s) {
  switch (s) {
    case SymmetryLevel::None: return "none";
    case SymmetryLevel::ValueOrder: return "value";
    case SymmetryLevel::FullCanonical: return "full";
  }
  return "none";
}

SymmetryLevel parse_symmetry(std::string_view name) {
  if (name == "none") return SymmetryLevel::None;
  if (name == "value") return SymmetryLevel::ValueOrder;
  if (name == "full") return SymmetryLevel::FullCanonical;
  throw Error(ErrorCode::ParseError, "unknown symmetry level '" + std::string(name) + "'");
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "Exhausted";
}

void validate(const SearchConfig& config, int ap_length) {
  if (config.n < 1) throw Error(ErrorCode::InvalidParams, "n must be >= 1");
  if (config.k < 1 || config.k > kMaxColors) {
    throw Error(ErrorCode::InvalidArity, "k must be in 1.." + std::to_string(kMaxColors));
  }
  if (config.n % config.k != 0) {
    throw Error(ErrorCode::NotDivisible, std::to_string(config.k) + " does not divide " +
                                             std::to_string(config.n));
  }
  if (ap_length < 3) throw Error(ErrorCode::InvalidLength, "AP length must be >= 3");
  if (config.threads < 1) throw Error(ErrorCode::InvalidParams, "threads must be >= 1");
}

ApTable build_ap_table(int n, int length) {
  ApTable table;
  table.n = n;
  table.length = length;
  table.others.assign(n, {});
  std::set<std::vector<int>> seen;
  std::vector<int> members(length);
  // d and n - d give the same member sets, so only d <= n / 2 is walked; the
  // set still deduplicates progressions that coincide for other reasons
  // (e.g. d = 1 and d = 2 in Z_5).
  for (int d = 1; 2 * d <= n; ++d) {
    if (!cyclic_difference_admissible(n, d, length)) continue;
    for (int start = 0; start < n; ++start) {
      for (int t = 0; t < length; ++t) members[t] = (start + t * d) % n;
      std::vector<int> key = members;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      auto& bucket = table.others[key.back()];
      bucket.insert(bucket.end(), key.begin(), key.end() - 1);
    }
  }
  return table;
}

bool closes_rainbow(const ApTable& table, std::span<const std::uint8_t> assigned, int p) {
  const auto& list = table.others[p];
  const int stride = table.length - 1;
  const std::uint32_t own = 1u << assigned[p];
  for (std::size_t i = 0; i < list.size(); i += stride) {
    std::uint32_t seen = own;
    bool distinct = true;
    for (int t = 0; t < stride; ++t) {
      const std::uint32_t bit = 1u << assigned[list[i + t]];
      if (seen & bit) {
        distinct = false;
        break;
      }
      seen |= bit;
    }
    if (distinct) return true;
  }
  return false;
}

namespace detail {

void validate_shape(int n, int k, int ap_length) {
  SearchConfig config;
  config.n = n;
  config.k = k;
  validate(config, ap_length);
}

AffineMaps build_affine_maps(int n) {
  AffineMaps maps;
  maps.n = n;
  for (int a = 1; a < std::max(n, 2); ++a) {
    if (std::gcd(a, n) != 1) continue;
    for (int b = 0; b < n; ++b) {
      if (a == 1 && b == 0) continue;
      for (int y = 0; y < n; ++y) {
        maps.image.push_back(static_cast<int>((static_cast<long long>(a) * y + b) % n));
      }
      ++maps.count;
    }
  }
  return maps;
}

std::optional<Clock::time_point> deadline_for(const Budget& budget) {
  if (budget.max_time.count() <= 0) return std::nullopt;
  return Clock::now() + budget.max_time;
}

}  // namespace detail
}  // namespace rainbow::search
