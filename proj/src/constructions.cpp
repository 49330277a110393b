#include "rainbow/constructions.hpp"

#include <array>
#include <string>

namespace rainbow::constructions {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Default: return "default";
    case Variant::Alt41: return "alt41";
    case Variant::Star: return "star";
  }
  return "default";
}

Variant parse_variant(std::string_view name) {
  if (name == "default") return Variant::Default;
  if (name == "alt41") return Variant::Alt41;
  if (name == "star") return Variant::Star;
  throw Error(ErrorCode::ParseError, "unknown variant '" + std::string(name) + "'");
}

std::vector<Variant> valid_variants(int n) {
  std::vector<Variant> out{Variant::Default};
  if (n % 8 == 3) out.push_back(Variant::Alt41);
  if (n % 8 == 4) out.push_back(Variant::Star);
  return out;
}

Coloring construct_interval4(int n, Variant variant) {
  if (n < 8) {
    throw Error(ErrorCode::TooSmall, "interval constructions need n >= 8, got " + std::to_string(n));
  }
  const int m = n / 8;
  const int r = n % 8;
  if ((variant == Variant::Alt41 && r != 3) || (variant == Variant::Star && r != 4)) {
    throw Error(ErrorCode::VariantMismatch, std::string(to_string(variant)) +
                                                " does not apply to n = " + std::to_string(n));
  }

  // {prefix, suffix} around A^m B^m, indexed by n mod 8.
  static constexpr std::array<std::array<std::string_view, 2>, 8> kLayout{{
      {"", ""},
      {"", "D"},
      {"", "DB"},
      {"", "DBA"},
      {"C", "DBA"},
      {"CC", "DBA"},
      {"BCC", "DBA"},
      {"ABCC", "DBA"},
  }};
  std::string_view prefix = kLayout[r][0];
  std::string_view suffix = kLayout[r][1];
  if (variant == Variant::Alt41) {
    prefix = "C";
    suffix = "DB";
  } else if (variant == Variant::Star) {
    prefix = "BAC";
    suffix = "D";
  }

  std::string letters(prefix);
  for (int i = 0; i < m; ++i) letters += kBlockA.letters;
  for (int i = 0; i < m; ++i) letters += kBlockB.letters;
  letters += suffix;
  return make_coloring(Topology::Interval, 4, letters);
}

int construct_k_base_length(int k, int N) {
  const int q = N / k;
  const int r = N % k;
  return r == k - 1 ? (k - 1) * q + r - 1 : (k - 1) * q + r;
}

Coloring construct_k(int k, int N) {
  if (k < 4) {
    throw Error(ErrorCode::UnsupportedArity,
                "no rainbow-free construction exists for k = " + std::to_string(k));
  }
  if (k > kMaxColors) {
    throw Error(ErrorCode::UnsupportedArity, "k exceeds " + std::to_string(kMaxColors));
  }
  if (N / k <= 1) {
    throw Error(ErrorCode::TooSmall, "N = " + std::to_string(N) + " leaves quotient <= 1 for k = " +
                                         std::to_string(k));
  }
  if (k == 4) return construct_interval4(N);

  const Coloring base = construct_k(k - 1, construct_k_base_length(k, N));
  std::vector<std::uint8_t> slots(base.slots().begin(), base.slots().end());
  slots.resize(N, static_cast<std::uint8_t>(k - 1));
  return Coloring(Topology::Interval, k, std::move(slots));
}

Coloring construct_z24() {
  static constexpr std::array<std::array<int, 6>, 4> kClasses{{
      {3, 6, 9, 16, 18, 20},
      {1, 8, 10, 12, 19, 22},
      {5, 7, 13, 15, 21, 23},
      {0, 2, 4, 11, 14, 17},
  }};
  std::vector<std::uint8_t> slots(24);
  for (std::size_t color = 0; color < kClasses.size(); ++color) {
    for (int residue : kClasses[color]) slots[residue] = static_cast<std::uint8_t>(color);
  }
  return Coloring(Topology::Cyclic, 4, std::move(slots));
}

Coloring tile(const Coloring& c, int times) {
  if (times < 1) throw Error(ErrorCode::InvalidRepeat, "tile count must be >= 1");
  if (c.topology() != Topology::Cyclic) {
    throw Error(ErrorCode::UnsupportedTopology, "tiling applies to Z_n colorings");
  }
  std::vector<std::uint8_t> slots;
  slots.reserve(static_cast<std::size_t>(c.size()) * times);
  for (int t = 0; t < times; ++t) slots.insert(slots.end(), c.slots().begin(), c.slots().end());
  return Coloring(Topology::Cyclic, c.arity(), std::move(slots));
}

int valuation3(int i) {
  int v = 0;
  while (i % 3 == 0) {
    i /= 3;
    ++v;
  }
  return v;
}

int pow3_color_count(int n) {
  int count = 1;
  for (long long p = 3; p <= n; p *= 3) ++count;
  return count;
}

Coloring construct_pow3(int n) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "n must be >= 1");
  std::vector<std::uint8_t> slots(n);
  for (int i = 1; i <= n; ++i) slots[i - 1] = static_cast<std::uint8_t>(valuation3(i));
  return Coloring(Topology::Interval, pow3_color_count(n), std::move(slots));
}

}  // namespace rainbow::constructions
