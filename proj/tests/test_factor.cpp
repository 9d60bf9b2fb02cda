#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "eertree/factor.hpp"
#include "eertree/oracle.hpp"
#include "util.hpp"

using namespace eertree;
using testutil::to_word;

TEST_CASE("palindromic length examples") {
  CHECK(pal_lengths("abacaba") == std::vector<std::int64_t>{0, 1, 2, 1, 2, 3, 2, 1});
  CHECK(pal_lengths("abc") == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK(pal_lengths("abaca")[5] == 3);
  CHECK(pal_length("abacaba") == 1);
}

TEST_CASE("ans matches oracle and naive loop") {
  std::mt19937_64 rng(73);
  for (int it = 0; it < 60; ++it) {
    const std::string s = testutil::random_string(rng, 120, it % 2 ? 2 : 3);
    const auto expect = oracle::pal_lengths_per_prefix(to_word(s));
    PalFactorizer f(256, s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      f.push(static_cast<unsigned char>(s[i]));
      REQUIRE(f.ans(i + 1) == expect[i + 1]);
      REQUIRE(f.ans_last_naive() == expect[i + 1]);
      if (i > 0) CHECK(std::abs(f.ans(i + 1) - f.ans(i)) <= 1);
    }
  }
}

TEST_CASE("parity minima match oracle") {
  const auto ab = min_parity_lengths("ab");
  CHECK(ab.even[2] == 2);
  CHECK(ab.odd[2] == kNoParityFactorization);
  const auto aa = min_parity_lengths("aa");
  CHECK(aa.odd[2] == 1);
  CHECK(aa.even[2] == 2);

  std::mt19937_64 rng(79);
  for (int it = 0; it < 60; ++it) {
    const std::string s = testutil::random_string(rng, 100, 2);
    const auto got = min_parity_lengths(s);
    const auto expect = oracle::parity_lengths(to_word(s));
    for (std::size_t i = 0; i <= s.size(); ++i) {
      REQUIRE(got.odd[i] == expect.odd[i]);
      REQUIRE(got.even[i] == expect.even[i]);
    }
  }
}

TEST_CASE("k-factorization examples") {
  auto two = k_factorization("aaa", 2);
  REQUIRE(two.has_value());
  CHECK(two->size() == 2);
  CHECK((*two)[0] + (*two)[1] == "aaa");
  CHECK(!k_factorization("ab", 1).has_value());
  auto three = k_factorization("abacaba", 3);
  REQUIRE(three.has_value());
  CHECK(three->size() == 3);
  std::string joined;
  for (const auto& p : *three) {
    CHECK(oracle::is_palindrome(to_word(p)));
    joined += p;
  }
  CHECK(joined == "abacaba");
}

TEST_CASE("k-factorization feasibility and witnesses") {
  std::mt19937_64 rng(83);
  for (int it = 0; it < 60; ++it) {
    const std::string s = testutil::random_string(rng, 60, 2);
    if (s.empty()) continue;
    std::uniform_int_distribution<std::int64_t> kd(1, static_cast<std::int64_t>(s.size()));
    for (int probe = 0; probe < 4; ++probe) {
      const std::int64_t k = kd(rng);
      const auto parts = k_factorization(s, k);
      CHECK(parts.has_value() == oracle::k_factorable(to_word(s), k));
      if (parts) {
        CHECK(static_cast<std::int64_t>(parts->size()) == k);
        std::string joined;
        for (const auto& p : *parts) {
          CHECK(!p.empty());
          CHECK(oracle::is_palindrome(to_word(p)));
          joined += p;
        }
        CHECK(joined == s);
      }
    }
  }
}

TEST_CASE("series scans stay logarithmic per step") {
  // Zimin word prefix: heavy series activity.
  std::string z = "a";
  char next = 'b';
  while (z.size() < 4000) {
    z = z + next + z;
    ++next;
  }
  PalFactorizer f(256, z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    f.push(static_cast<unsigned char>(z[i]));
    const double bound = 2.0 * std::log2(static_cast<double>(i) + 2) + 2;
    CHECK(static_cast<double>(f.last_push_series()) <= bound);
  }
}

TEST_CASE("link occurs twice in leading suffix-palindromes of its series") {
  std::mt19937_64 rng(89);
  for (int it = 0; it < 10; ++it) {
    const std::string s = testutil::random_string(rng, 100, 2);
    Options opt;
    opt.sigma = 256;
    opt.mode = Mode::Series;
    Eertree t = Eertree::from_bytes(s, opt);
    for (NodeId v = 2; v < static_cast<NodeId>(t.size()); ++v) {
      const NodeId link = t.node_link(v);
      if (link < 2 || t.node_diff(link) != t.node_diff(v)) continue;
      const std::string big = t.node_string(v), small = t.node_string(link);
      std::int64_t occ = 0;
      for (std::size_t i = 0; i + small.size() <= big.size(); ++i)
        occ += big.compare(i, small.size(), small) == 0;
      CHECK(occ == 2);
    }
  }
}
