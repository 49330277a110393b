#include <doctest.h>

#include <string>

#include "oracle.hpp"
#include "rainbow/constructions.hpp"

using namespace rainbow;
using namespace rainbow::constructions;

namespace {

std::string repeat(std::string_view block, int m) {
  std::string out;
  for (int i = 0; i < m; ++i) out += block;
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("construct_interval4 reproduces the published layouts") {
  CHECK(construct_interval4(8).letters() == "ABCCDDAB");
  CHECK(construct_interval4(9).letters() == "ABCCDDABD");
  CHECK(construct_interval4(10).letters() == "ABCCDDABDB");
  CHECK(construct_interval4(11).letters() == "ABCCDDABDBA");
  CHECK(construct_interval4(12).letters() == "CABCCDDABDBA");
  CHECK(construct_interval4(12, Variant::Star).letters() == "BACABCCDDABD");
  CHECK(construct_interval4(13).letters() == "CCABCCDDABDBA");
  CHECK(construct_interval4(14).letters() == "BCCABCCDDABDBA");
  CHECK(construct_interval4(15).letters() == "ABCCABCCDDABDBA");
  CHECK(construct_interval4(11, Variant::Alt41).letters() == "CABCCDDABDB");
  CHECK(construct_interval4(16).letters() == "ABCCABCCDDABDDAB");
}

TEST_CASE("construct_interval4 errors") {
  CHECK(code_of([] { construct_interval4(7); }) == ErrorCode::TooSmall);
  CHECK(code_of([] { construct_interval4(12, Variant::Alt41); }) == ErrorCode::VariantMismatch);
  CHECK(code_of([] { construct_interval4(11, Variant::Star); }) == ErrorCode::VariantMismatch);
}

TEST_CASE("construct_interval4 properties for n in 8..400") {
  for (int n = 8; n <= 400; ++n) {
    for (auto v : valid_variants(n)) {
      const auto c = construct_interval4(n, v);
      REQUIRE(c.size() == n);
      CHECK_FALSE(find_rainbow_ap(c, 4));

      const auto counts = color_counts(c);
      for (auto size : counts) {
        CHECK(size >= static_cast<std::size_t>(n / 4));
        CHECK(size <= static_cast<std::size_t>((n + 3) / 4));
      }
      const auto balance = classify_balance(c);
      CHECK((balance == BalanceClass::Equinumerous) == (n % 4 == 0));
      CHECK((balance == BalanceClass::Equinumerous || balance == BalanceClass::NearEquinumerous));

      // Middle is A^m B^m.
      const int m = n / 8;
      const std::string middle = repeat(kBlockA.letters, m) + repeat(kBlockB.letters, m);
      const auto pos = c.letters().find(middle);
      CHECK(pos != std::string::npos);
    }
  }
}

TEST_CASE("small constructions pass the independent oracle") {
  for (int n = 8; n <= 64; ++n) {
    for (auto v : valid_variants(n)) CHECK_FALSE(oracle::interval_rainbow(construct_interval4(n, v).letters(), 4));
  }
}

TEST_CASE("construct_k examples") {
  CHECK(construct_k(4, 12).letters() == "CABCCDDABDBA");
  const auto c510 = construct_k(5, 10);
  CHECK(c510.letters() == "ABCCDDABEE");
  CHECK_FALSE(oracle::interval_has_rainbow(c510.letters(), 5));
  const auto c514 = construct_k(5, 14);
  CHECK(c514.letters() == "ABCCDDABDBAEEE");
  CHECK_FALSE(oracle::interval_has_rainbow(c514.letters(), 5));

  CHECK(code_of([] { construct_k(3, 9); }) == ErrorCode::UnsupportedArity);
  CHECK(code_of([] { construct_k(5, 9); }) == ErrorCode::TooSmall);
}

TEST_CASE("construct_k structure for k in 5..7") {
  for (int k = 5; k <= 7; ++k) {
    for (int q = 2; q <= 12; ++q) {
      for (int r = 0; r < k; ++r) {
        const int N = k * q + r;
        const auto c = construct_k(k, N);
        REQUIRE(c.size() == N);
        CHECK_FALSE(find_rainbow_ap(c, k));
        const auto counts = color_counts(c);
        for (auto size : counts) CHECK(size > 0);
        const auto balance = classify_balance(c);
        CHECK((balance == BalanceClass::Equinumerous || balance == BalanceClass::NearEquinumerous));

        const int base_len = construct_k_base_length(k, N);
        const auto base = construct_k(k - 1, base_len);
        CHECK(c.letters().substr(0, base_len) == base.letters());
        for (int pos = base_len + 1; pos <= N; ++pos) CHECK(c.at(pos).index == k - 1);
        CHECK(N - base_len == (r == k - 1 ? q + 1 : q));
      }
    }
  }
}

TEST_CASE("construct_z24 matches the residue table and the period tuple") {
  const auto z = construct_z24();
  CHECK(z.topology() == Topology::Cyclic);
  CHECK(z.at(1).letter() == 'B');
  CHECK(z.at(3).letter() == 'A');
  CHECK(z.at(0).letter() == 'D');

  // The period tuple lists residues 1, 2, ..., 24 (24 being residue 0).
  const std::string tuple = "BDADCACBABDBCDCADABACBCD";
  for (int i = 1; i <= 24; ++i) CHECK(z.at(i % 24).letter() == tuple[i - 1]);

  CHECK(color_counts(z) == std::vector<std::size_t>{6, 6, 6, 6});
  CHECK_FALSE(find_rainbow_ap(z, 4));
  for (int r = 0; r < 24; ++r) CHECK(z.at(r) != z.at((r + 1) % 24));
}

TEST_CASE("tile") {
  const auto z48 = tile(construct_z24(), 2);
  CHECK(z48.size() == 48);
  for (int i = 0; i < 48; ++i) CHECK(z48.at(i) == construct_z24().at(i % 24));
  CHECK_FALSE(find_rainbow_ap(z48, 4));
  CHECK(code_of([] { tile(construct_z24(), 0); }) == ErrorCode::InvalidRepeat);
  CHECK(code_of([] { tile(make_coloring(Topology::Interval, 2, "AB"), 2); }) ==
        ErrorCode::UnsupportedTopology);
}

TEST_CASE("construct_pow3") {
  CHECK(construct_pow3(3).letters() == "AAB");
  const auto c9 = construct_pow3(9);
  CHECK(c9.letters() == "AABAABAAC");
  CHECK(c9.arity() == 3);
  CHECK_FALSE(find_rainbow_ap(construct_pow3(81), 3));
  CHECK_FALSE(oracle::interval_rainbow(construct_pow3(81).letters(), 3));
  CHECK(code_of([] { construct_pow3(0); }) == ErrorCode::TooSmall);

  CHECK(pow3_color_count(1) == 1);
  CHECK(pow3_color_count(2) == 1);
  CHECK(pow3_color_count(3) == 2);
  CHECK(pow3_color_count(26) == 3);
  CHECK(pow3_color_count(27) == 4);
  CHECK(pow3_color_count(2187) == 8);

  const auto c = construct_pow3(500);
  for (int i = 1; i <= 500; ++i) CHECK(c.at(i).index == valuation3(i));
}
