#include <algorithm>
#include <limits>
#include <numeric>

#include "search_engine.hpp"

namespace rainbow::search {

std::uint64_t equinumerous_count(int n, int k) {
  detail::validate_shape(n, k, 3);
  const int share = n / k;
  // Product of binomials C(remaining, share); each step stays exact.
  unsigned __int128 total = 1;
  int remaining = n;
  for (int color = 0; color < k; ++color) {
    unsigned __int128 binom = 1;
    for (int i = 1; i <= share; ++i) binom = binom * (remaining - share + i) / i;
    total *= binom;
    if (total > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorCode::InvalidParams, "multinomial overflows 64 bits");
    }
    remaining -= share;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t enumerate_equinumerous(
    int n, int k, std::optional<std::uint64_t> limit,
    const std::function<void(std::span<const std::uint8_t>)>& visit) {
  detail::validate_shape(n, k, 3);
  std::vector<std::uint8_t> slots(n);
  for (int i = 0; i < n; ++i) slots[i] = static_cast<std::uint8_t>(i / (n / k));
  std::uint64_t count = 0;
  do {
    if (limit && count >= *limit) break;
    if (visit) visit(slots);
    ++count;
  } while (std::next_permutation(slots.begin(), slots.end()));
  return count;
}

namespace {

class LexWalker {
 public:
  LexWalker(int n, int k, int length)
      : n_(n), k_(k), length_(length), cap_(n / k), assign_(n), counts_(k, 0), closing_(n) {
    // For every residue p, the member lists (resolved through core) of the
    // APs whose largest member is p. Both directions of a progression are
    // kept; the walker does not rely on the reversal symmetry.
    for (int d = 1; d < n_; ++d) {
      for (int start = 0; start < n_; ++start) {
        const auto m = ap_members(n_, Topology::Cyclic, APSpec{start, d, length_});
        if (m.status != MemberStatus::Ok) continue;
        const int top = *std::max_element(m.elements.begin(), m.elements.end());
        closing_[top].push_back(m.elements);
      }
    }
  }

  bool run() { return dfs(0); }

  std::uint64_t nodes() const { return nodes_; }
  std::optional<Coloring>& found() { return found_; }

 private:
  bool closes_rainbow_at(int p) const {
    for (const auto& members : closing_[p]) {
      std::uint32_t seen = 0;
      bool distinct = true;
      for (int x : members) {
        const std::uint32_t bit = 1u << assign_[x];
        if (seen & bit) distinct = false;
        seen |= bit;
      }
      if (distinct) return true;
    }
    return false;
  }

  bool dfs(int p) {
    ++nodes_;
    if (p == n_) {
      Coloring c(Topology::Cyclic, k_, assign_);
      if (find_rainbow_ap(c, length_)) return false;
      found_ = std::move(c);
      return true;
    }
    for (int c = 0; c < k_; ++c) {
      if (counts_[c] == cap_) continue;
      assign_[p] = static_cast<std::uint8_t>(c);
      if (closes_rainbow_at(p)) continue;
      ++counts_[c];
      if (dfs(p + 1)) return true;
      --counts_[c];
    }
    return false;
  }

  int n_, k_, length_, cap_;
  std::vector<std::uint8_t> assign_;
  std::vector<int> counts_;
  std::vector<std::vector<std::vector<int>>> closing_;
  std::uint64_t nodes_ = 0;
  std::optional<Coloring> found_;
};

}  // namespace

ExhaustiveResult all_contain_rainbow(int n, int k, int ap_length) {
  detail::validate_shape(n, k, ap_length);
  LexWalker walker(n, k, ap_length);
  ExhaustiveResult out;
  out.all_contain = !walker.run();
  out.counterexample = std::move(walker.found());
  out.nodes = walker.nodes();
  return out;
}

bool verify_certificate(const Coloring& c, int ap_length) {
  if (c.topology() != Topology::Cyclic) {
    throw Error(ErrorCode::UnsupportedTopology, "certificates are Z_n colorings");
  }
  return classify_balance(c) == BalanceClass::Equinumerous && !find_rainbow_ap(c, ap_length);
}

}  // namespace rainbow::search
