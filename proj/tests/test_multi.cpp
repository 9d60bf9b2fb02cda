#include <doctest.h>

#include <set>

#include "eertree/multi.hpp"
#include "eertree/oracle.hpp"
#include "util.hpp"

using namespace eertree;
using testutil::to_word;

namespace {

Options byte_options() {
  Options opt;
  opt.sigma = 256;
  opt.mode = Mode::Quick;
  return opt;
}

std::set<std::string> common_oracle(const std::vector<std::string>& strings) {
  std::set<std::string> acc;
  bool first = true;
  for (const auto& s : strings) {
    std::set<std::string> cur;
    for (const auto& w : oracle::pal_set(to_word(s))) cur.insert(testutil::to_bytes(w));
    if (first) {
      acc = cur;
      first = false;
    } else {
      std::set<std::string> inter;
      for (const auto& x : acc)
        if (cur.contains(x)) inter.insert(x);
      acc = inter;
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("flags for aba and bab") {
  JointEertree j(2, byte_options());
  j.add_string("aba");
  j.add_string("bab");
  CHECK(j.common_count() == 2);  // forces finalize
  const auto& t = j.tree();
  for (NodeId v = 2; v < static_cast<NodeId>(t.size()); ++v) {
    const std::string s = t.node_string(v);
    if (s == "a" || s == "b") {
      CHECK(j.in_string(v, 0));
      CHECK(j.in_string(v, 1));
    }
    if (s == "aba") {
      CHECK(j.in_string(v, 0));
      CHECK(!j.in_string(v, 1));
    }
    if (s == "bab") {
      CHECK(!j.in_string(v, 0));
      CHECK(j.in_string(v, 1));
    }
  }
  auto longest = j.longest_common();
  REQUIRE(longest.has_value());
  CHECK(testutil::to_bytes(*longest) == "a");  // tie -> earliest created
}

TEST_CASE("identical and empty strings") {
  JointEertree j(2, byte_options());
  j.add_string("x");
  j.add_string("x");
  CHECK(j.common_count() == 1);
  JointEertree k(2, byte_options());
  k.add_string("");
  k.add_string("a");
  CHECK(k.common_count() == 0);
  CHECK(!k.longest_common().has_value());
  JointEertree m(2, byte_options());
  m.add_string("abacaba");
  m.add_string("abacaba");
  CHECK(testutil::to_bytes(*m.longest_common()) == "abacaba");
  JointEertree d(2, byte_options());
  d.add_string("abc");
  d.add_string("def");
  CHECK(d.common_count() == 0);
}

TEST_CASE("common against the oracle") {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 40; ++it) {
    std::vector<std::string> strings;
    const std::size_t k = 2 + it % 3;
    for (std::size_t i = 0; i < k; ++i)
      strings.push_back(testutil::random_string(rng, 60, 2));
    JointEertree j(k, byte_options());
    for (const auto& s : strings) j.add_string(s);
    const auto expect = common_oracle(strings);
    CHECK(j.common_count() == static_cast<std::int64_t>(expect.size()));
    auto longest = j.longest_common();
    if (expect.empty()) {
      CHECK(!longest.has_value());
    } else {
      std::size_t max_len = 0;
      for (const auto& s : expect) max_len = std::max(max_len, s.size());
      REQUIRE(longest.has_value());
      CHECK(longest->size() == max_len);
      CHECK(expect.contains(testutil::to_bytes(*longest)));
    }
  }
}

TEST_CASE("dominance example and oracle") {
  JointEertree j(2, byte_options());
  j.add_string("aa");
  j.add_string("a");
  CHECK(j.occ_dominance(0, 1) == 2);
  JointEertree same(2, byte_options());
  same.add_string("abcba");
  same.add_string("abcba");
  CHECK(same.occ_dominance(0, 1) == 0);

  std::mt19937_64 rng(67);
  for (int it = 0; it < 30; ++it) {
    const std::string s = testutil::random_string(rng, 100, 2);
    const std::string t = testutil::random_string(rng, 100, 2);
    JointEertree joint(2, byte_options());
    joint.add_string(s);
    joint.add_string(t);
    const auto occ_s = oracle::occ_table(to_word(s));
    const auto occ_t = oracle::occ_table(to_word(t));
    std::set<oracle::Word> pals;
    for (const auto& [p, n] : occ_s) pals.insert(p);
    for (const auto& [p, n] : occ_t) pals.insert(p);
    std::int64_t expect = 0;
    for (const auto& p : pals) {
      const std::int64_t a = occ_s.contains(p) ? occ_s.at(p) : 0;
      const std::int64_t b = occ_t.contains(p) ? occ_t.at(p) : 0;
      expect += a > b;
    }
    CHECK(joint.occ_dominance(0, 1) == expect);
  }
}

TEST_CASE("triples example and brute force") {
  JointEertree j(2, byte_options());
  j.add_string("a");
  j.add_string("a");
  CHECK(j.equal_palindrome_triples(0, 1) == 1);
  JointEertree j2(2, byte_options());
  j2.add_string("aa");
  j2.add_string("aa");
  CHECK(j2.equal_palindrome_triples(0, 1) == 5);

  std::mt19937_64 rng(71);
  for (int it = 0; it < 20; ++it) {
    const std::string s = testutil::random_string(rng, 40, 2);
    const std::string t = testutil::random_string(rng, 40, 2);
    JointEertree joint(2, byte_options());
    joint.add_string(s);
    joint.add_string(t);
    std::int64_t expect = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t jj = 0; jj < t.size(); ++jj)
        for (std::size_t len = 1; i + len <= s.size() && jj + len <= t.size(); ++len) {
          const std::string a = s.substr(i, len);
          if (a != t.substr(jj, len)) break;
          expect += oracle::is_palindrome(to_word(a));
        }
    CHECK(joint.equal_palindrome_triples(0, 1) == expect);
  }
}

TEST_CASE("ingestion order changes ids, not content") {
  const std::vector<std::string> strings{"abba", "bab", "aab"};
  auto describe = [&](const std::vector<std::string>& order) {
    JointEertree j(order.size(), byte_options());
    for (const auto& s : order) j.add_string(s);
    j.common_count();
    std::set<std::string> names;
    const auto& t = j.tree();
    for (NodeId v = 2; v < static_cast<NodeId>(t.size()); ++v) names.insert(t.node_string(v));
    return names;
  };
  CHECK(describe(strings) == describe({"aab", "abba", "bab"}));
}

TEST_CASE("too many strings rejected") {
  JointEertree j(1, byte_options());
  j.add_string("a");
  CHECK_THROWS_AS(j.add_string("b"), std::logic_error);
}
