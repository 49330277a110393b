#pragma once

#include <string_view>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow::constructions {

struct Block {
  std::string_view name;
  std::string_view letters;
};

inline constexpr Block kBlockA{"A", "ABCC"};
inline constexpr Block kBlockB{"B", "DDAB"};

// Alt41 is the alternative layout for n = 3 (mod 8); Star is the older
// layout for n = 4 (mod 8). Default is the primary layout for every residue.
enum class Variant { Default, Alt41, Star };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

// Variants that are valid for this n (Default first).
std::vector<Variant> valid_variants(int n);

// Rainbow-AP(4)-free 4-coloring of [n], n >= 8, assembled from m = n / 8
// copies of each block with a residue-dependent prefix and suffix.
Coloring construct_interval4(int n, Variant variant = Variant::Default);

// Rainbow-AP(k)-free k-coloring of [N] for k >= 4, N = k*q + r with q >= 2.
// Built by stacking one monochrome top segment per extra color on top of the
// 4-color construction.
Coloring construct_k(int k, int N);

// Length of the (k-1)-colored base that construct_k(k, N) extends.
int construct_k_base_length(int k, int N);

// The 24-periodic proper equinumerous coloring of Z_24.
Coloring construct_z24();

// Z_{times*n} coloring with color(i) = c(i mod n).
Coloring tile(const Coloring& c, int times);

int valuation3(int i);

// floor(log_3 n) + 1 via integer arithmetic.
int pow3_color_count(int n);

// Position i gets the 3-adic valuation of i as its color.
Coloring construct_pow3(int n);

}  // namespace rainbow::constructions
