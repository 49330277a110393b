#include "rainbow/core.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidColorLetter: return "InvalidColorLetter";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::InvalidDifference: return "InvalidDifference";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnsupportedTopology: return "UnsupportedTopology";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::VariantMismatch: return "VariantMismatch";
    case ErrorCode::UnsupportedArity: return "UnsupportedArity";
    case ErrorCode::InvalidRepeat: return "InvalidRepeat";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(Topology t) {
  return t == Topology::Interval ? "interval" : "cyclic";
}

std::string_view to_string(BalanceClass b) {
  switch (b) {
    case BalanceClass::Equinumerous: return "Equinumerous";
    case BalanceClass::NearEquinumerous: return "NearEquinumerous";
    case BalanceClass::Balanced: return "Balanced";
    case BalanceClass::Unbalanced: return "Unbalanced";
  }
  return "Unknown";
}

Coloring::Coloring(Topology topology, int k, std::vector<std::uint8_t> slots)
    : topology_(topology), k_(k), slots_(std::move(slots)) {
  if (k < 1 || k > kMaxColors) {
    throw Error(ErrorCode::InvalidArity,
                "k must be in 1.." + std::to_string(kMaxColors) + ", got " +
                    std::to_string(k));
  }
  if (slots_.empty()) throw Error(ErrorCode::TooSmall, "coloring needs n >= 1");
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i] >= k) {
      throw Error(ErrorCode::InvalidColorLetter,
                  "color index " + std::to_string(slots_[i]) + " at slot " +
                      std::to_string(i) + " exceeds k=" + std::to_string(k));
    }
  }
}

std::string Coloring::letters() const {
  std::string out(slots_.size(), 'A');
  for (std::size_t i = 0; i < slots_.size(); ++i) out[i] = static_cast<char>('A' + slots_[i]);
  return out;
}

Coloring make_coloring(Topology topology, int k, std::string_view letters) {
  if (k < 1 || k > kMaxColors) {
    throw Error(ErrorCode::InvalidArity, "k must be in 1.." +
                                             std::to_string(kMaxColors) +
                                             ", got " + std::to_string(k));
  }
  if (letters.empty()) throw Error(ErrorCode::TooSmall, "empty coloring text");
  std::vector<std::uint8_t> slots(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char ch = letters[i];
    if (ch < 'A' || ch >= 'A' + k) {
      throw Error(ErrorCode::InvalidColorLetter,
                  std::string("character '") + ch + "' at position " +
                      std::to_string(i + 1) + " is outside A.." +
                      static_cast<char>('A' + k - 1));
    }
    slots[i] = static_cast<std::uint8_t>(ch - 'A');
  }
  return Coloring(topology, k, std::move(slots));
}

std::vector<std::size_t> color_counts(const Coloring& c) {
  std::vector<std::size_t> counts(c.arity(), 0);
  for (auto s : c.slots()) ++counts[s];
  return counts;
}

BalanceClass classify_balance(const Coloring& c) {
  const auto counts = color_counts(c);
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  if (*lo == *hi) return BalanceClass::Equinumerous;
  if (*hi - *lo <= 1) return BalanceClass::NearEquinumerous;
  const std::size_t floor_share = static_cast<std::size_t>(c.size() / c.arity());
  if (*lo >= floor_share) return BalanceClass::Balanced;
  return BalanceClass::Unbalanced;
}

bool is_recessive(const Coloring& c, Color color) {
  const auto s = c.slots();
  const std::size_t n = s.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (s[i] == color.index && s[i + 1] == color.index) return false;
  }
  if (c.topology() == Topology::Cyclic && n > 1 && s[n - 1] == color.index &&
      s[0] == color.index) {
    return false;
  }
  return true;
}

bool cyclic_difference_admissible(int n, int d, int length) {
  const int dm = ((d % n) + n) % n;
  if (dm == 0) return length <= 1;
  return n / std::gcd(n, dm) >= length;
}

namespace {

void check_length(int length) {
  if (length < 3) {
    throw Error(ErrorCode::InvalidLength,
                "AP length must be >= 3, got " + std::to_string(length));
  }
}

// Calls f(start_position, d, slot_list) for every admissible AP of the given
// length in (d, start) order; stops early when f returns true.
template <typename F>
void for_each_ap(int n, Topology topology, int length, F&& f) {
  std::vector<int> slots(length);
  if (topology == Topology::Interval) {
    for (int d = 1; (length - 1) * d < n; ++d) {
      for (int start = 1; start + (length - 1) * d <= n; ++start) {
        for (int t = 0; t < length; ++t) slots[t] = start - 1 + t * d;
        if (f(start, d, slots)) return;
      }
    }
  } else {
    for (int d = 1; d < n; ++d) {
      if (!cyclic_difference_admissible(n, d, length)) continue;
      for (int start = 0; start < n; ++start) {
        for (int t = 0; t < length; ++t) slots[t] = (start + t * d) % n;
        if (f(start, d, slots)) return;
      }
    }
  }
}

bool slots_rainbow(std::span<const std::uint8_t> colors, std::span<const int> slots) {
  std::uint32_t seen = 0;
  for (int s : slots) {
    const std::uint32_t bit = 1u << colors[s];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

APWitness make_witness(const Coloring& c, int start, int d, std::span<const int> slots) {
  APWitness w;
  w.spec = APSpec{start, d, static_cast<int>(slots.size())};
  for (int s : slots) {
    w.elements.push_back(c.position_of(s));
    w.colors.push_back(Color{c.slots()[s]});
  }
  return w;
}

}  // namespace

APMembers ap_members(int n, Topology topology, const APSpec& spec) {
  if (spec.d < 1) {
    throw Error(ErrorCode::InvalidDifference,
                "common difference must be >= 1, got " + std::to_string(spec.d));
  }
  check_length(spec.length);
  APMembers out;
  if (topology == Topology::Interval) {
    const long long last = spec.start + static_cast<long long>(spec.length - 1) * spec.d;
    if (spec.start < 1 || last > n) {
      out.status = MemberStatus::OutOfRange;
      return out;
    }
    for (int t = 0; t < spec.length; ++t) out.elements.push_back(spec.start + t * spec.d);
    return out;
  }
  if (spec.start < 0 || spec.start >= n) {
    out.status = MemberStatus::OutOfRange;
    return out;
  }
  if (!cyclic_difference_admissible(n, spec.d, spec.length)) {
    out.status = MemberStatus::NotDistinct;
    return out;
  }
  for (int t = 0; t < spec.length; ++t) {
    out.elements.push_back(static_cast<int>((spec.start + static_cast<long long>(t) * spec.d) % n));
  }
  return out;
}

std::optional<APWitness> find_rainbow_ap(const Coloring& c, int length) {
  check_length(length);
  if (length > c.arity()) return std::nullopt;
  std::optional<APWitness> found;
  const auto colors = c.slots();
  for_each_ap(c.size(), c.topology(), length,
              [&](int start, int d, std::span<const int> slots) {
                if (!slots_rainbow(colors, slots)) return false;
                found = make_witness(c, start, d, slots);
                return true;
              });
  return found;
}

std::vector<APWitness> enumerate_rainbow_aps(const Coloring& c, int length) {
  check_length(length);
  std::vector<APWitness> out;
  if (length > c.arity()) return out;
  const auto colors = c.slots();
  for_each_ap(c.size(), c.topology(), length,
              [&](int start, int d, std::span<const int> slots) {
                if (slots_rainbow(colors, slots)) out.push_back(make_witness(c, start, d, slots));
                return false;
              });
  return out;
}

Coloring apply_affine(const Coloring& c, long long a, long long b,
                      std::span<const int> sigma) {
  if (c.topology() != Topology::Cyclic) {
    throw Error(ErrorCode::UnsupportedTopology, "affine maps act on Z_n only");
  }
  const long long n = c.size();
  const long long am = ((a % n) + n) % n;
  const long long bm = ((b % n) + n) % n;
  if (std::gcd(am, n) != 1) {
    throw Error(ErrorCode::NotInvertible, "multiplier " + std::to_string(a) +
                                              " is not a unit mod " + std::to_string(n));
  }
  const int k = c.arity();
  std::vector<int> perm(k);
  if (sigma.empty()) {
    std::iota(perm.begin(), perm.end(), 0);
  } else {
    if (static_cast<int>(sigma.size()) != k) {
      throw Error(ErrorCode::InvalidPermutation, "permutation size differs from k");
    }
    perm.assign(sigma.begin(), sigma.end());
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i) {
      if (sorted[i] != i) throw Error(ErrorCode::InvalidPermutation, "not a permutation of 0..k-1");
    }
  }
  std::vector<std::uint8_t> out(n);
  const auto in = c.slots();
  for (long long x = 0; x < n; ++x) {
    out[(am * x + bm) % n] = static_cast<std::uint8_t>(perm[in[x]]);
  }
  return Coloring(Topology::Cyclic, k, std::move(out));
}

namespace {

std::vector<std::uint8_t> first_occurrence(std::span<const std::uint8_t> in, int k) {
  std::vector<int> relabel(k, -1);
  int next = 0;
  std::vector<std::uint8_t> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (relabel[in[i]] < 0) relabel[in[i]] = next++;
    out[i] = static_cast<std::uint8_t>(relabel[in[i]]);
  }
  return out;
}

}  // namespace

Coloring normalize_colors(const Coloring& c) {
  return Coloring(c.topology(), c.arity(), first_occurrence(c.slots(), c.arity()));
}

Coloring canonical_form(const Coloring& c) {
  const int n = c.size();
  const int k = c.arity();
  const auto in = c.slots();
  std::vector<std::uint8_t> best = first_occurrence(in, k);
  std::vector<std::uint8_t> image(n);
  auto consider = [&] {
    auto candidate = first_occurrence(image, k);
    if (candidate < best) best = std::move(candidate);
  };
  if (c.topology() == Topology::Interval) {
    std::reverse_copy(in.begin(), in.end(), image.begin());
    consider();
  } else {
    for (int a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      for (int b = 0; b < n; ++b) {
        for (int x = 0; x < n; ++x) image[(static_cast<long long>(a) * x + b) % n] = in[x];
        consider();
      }
    }
  }
  return Coloring(c.topology(), k, std::move(best));
}

Coloring to_cyclic(const Coloring& interval) {
  if (interval.topology() != Topology::Interval) {
    throw Error(ErrorCode::UnsupportedTopology, "to_cyclic expects an interval coloring");
  }
  const int n = interval.size();
  std::vector<std::uint8_t> out(n);
  for (int pos = 1; pos <= n; ++pos) out[pos % n] = interval.at(pos).index;
  return Coloring(Topology::Cyclic, interval.arity(), std::move(out));
}

Coloring to_interval(const Coloring& cyclic) {
  if (cyclic.topology() != Topology::Cyclic) {
    throw Error(ErrorCode::UnsupportedTopology, "to_interval expects a cyclic coloring");
  }
  const int n = cyclic.size();
  std::vector<std::uint8_t> out(n);
  for (int pos = 1; pos <= n; ++pos) out[pos - 1] = cyclic.at(pos % n).index;
  return Coloring(Topology::Interval, cyclic.arity(), std::move(out));
}

bool lexicographically_less(const Coloring& lhs, const Coloring& rhs) {
  const auto a = lhs.slots();
  const auto b = rhs.slots();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace rainbow
