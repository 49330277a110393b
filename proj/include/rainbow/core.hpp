#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

// Colors are displayed as 'A' + index, so the alphabet caps the arity.
inline constexpr int kMaxColors = 26;

enum class Topology { Interval, Cyclic };

std::string_view to_string(Topology t);

struct Color {
  std::uint8_t index = 0;

  char letter() const { return static_cast<char>('A' + index); }
  friend auto operator<=>(Color, Color) = default;
};

// A total k-coloring of [n] (positions 1..n) or Z_n (residues 0..n-1).
//
// Colors are stored in "slot" order: slot s holds position s + 1 for the
// interval and residue s for the cyclic group. Most callers only need
// at(position); the slot view exists for tight loops.
class Coloring {
 public:
  Coloring(Topology topology, int k, std::vector<std::uint8_t> slots);

  Topology topology() const { return topology_; }
  int size() const { return static_cast<int>(slots_.size()); }
  int arity() const { return k_; }

  std::span<const std::uint8_t> slots() const { return slots_; }

  int slot_of(int position) const {
    return topology_ == Topology::Interval ? position - 1 : position;
  }
  int position_of(int slot) const {
    return topology_ == Topology::Interval ? slot + 1 : slot;
  }

  Color at(int position) const { return Color{slots_.at(slot_of(position))}; }

  std::string letters() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  Topology topology_;
  int k_;
  std::vector<std::uint8_t> slots_;
};

enum class BalanceClass { Equinumerous, NearEquinumerous, Balanced, Unbalanced };

std::string_view to_string(BalanceClass b);

struct APSpec {
  int start = 0;
  int d = 1;
  int length = 3;

  friend bool operator==(const APSpec&, const APSpec&) = default;
};

enum class MemberStatus { Ok, NotDistinct, OutOfRange };

struct APMembers {
  MemberStatus status = MemberStatus::Ok;
  std::vector<int> elements;  // positions, valid only when status == Ok
};

struct APWitness {
  APSpec spec;
  std::vector<int> elements;
  std::vector<Color> colors;

  friend bool operator==(const APWitness&, const APWitness&) = default;
};

Coloring make_coloring(Topology topology, int k, std::string_view letters);

// Indexed by color; always k entries.
std::vector<std::size_t> color_counts(const Coloring& c);

// Strongest of Equinumerous ⊂ NearEquinumerous ⊂ Balanced that holds.
BalanceClass classify_balance(const Coloring& c);

// No two adjacent positions carry `color`; the cyclic topology also pairs
// residue n-1 with residue 0.
bool is_recessive(const Coloring& c, Color color);

// A cyclic AP is admissible only when its members are pairwise distinct,
// i.e. n / gcd(n, d) >= length.
APMembers ap_members(int n, Topology topology, const APSpec& spec);

bool cyclic_difference_admissible(int n, int d, int length);

// First rainbow AP in (d, start) order, or nullopt.
std::optional<APWitness> find_rainbow_ap(const Coloring& c, int length);

// All rainbow APs in (d, start) order. Cyclic output lists both (start, d)
// and its reversal (last, n - d).
std::vector<APWitness> enumerate_rainbow_aps(const Coloring& c, int length);

// Position a*x + b (mod n) of the result carries sigma(color of x).
// sigma must be a permutation of 0..k-1; an empty span means identity.
Coloring apply_affine(const Coloring& c, long long a, long long b,
                      std::span<const int> sigma = {});

// Relabel colors in order of first appearance (slot order). This is the
// lexicographically least member of the color-permutation orbit.
Coloring normalize_colors(const Coloring& c);

// Lexicographically least member of the orbit under affine maps x -> ax+b
// (gcd(a, n) = 1) times color permutations for Z_n, and under reversal
// times color permutations for [n].
Coloring canonical_form(const Coloring& c);

// [n] -> Z_n via i -> i mod n, so position n lands on residue 0.
Coloring to_cyclic(const Coloring& interval);
// Inverse of to_cyclic.
Coloring to_interval(const Coloring& cyclic);

bool lexicographically_less(const Coloring& lhs, const Coloring& rhs);

}  // namespace rainbow
