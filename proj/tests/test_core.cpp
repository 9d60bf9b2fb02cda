#include <doctest.h>

#include <algorithm>
#include <set>

#include "eertree/eertree.hpp"
#include "eertree/oracle.hpp"
#include "util.hpp"

using namespace eertree;
using testutil::to_word;

namespace {

std::set<std::string> node_strings(const Eertree& t) {
  std::set<std::string> out;
  for (NodeId v = 2; v < static_cast<NodeId>(t.size()); ++v) out.insert(t.node_string(v));
  return out;
}

}  // namespace

TEST_CASE("eertree of eertree") {
  for (Mode mode : {Mode::Basic, Mode::Quick, Mode::Direct}) {
    Eertree t = build_from_bytes("eertree", mode);
    CHECK(t.distinct_count() == 7);
    CHECK(node_strings(t) ==
          std::set<std::string>{"e", "ee", "r", "t", "rtr", "ertre", "eertree"});
    CHECK(t.node_string(t.max_suf()) == "eertree");
    // Suffix links: eertree -> ee -> e -> (len 0 root).
    const NodeId whole = t.max_suf();
    CHECK(t.node_string(t.node_link(whole)) == "ee");
    CHECK(t.node_string(t.node_link(t.node_link(whole))) == "e");
    CHECK(t.node_link(t.node_link(t.node_link(whole))) == kRootZero);
    // Edges: "rtr" is reached from "t" by r, "ertre" from "rtr" by e.
    NodeId tn = kNoNode, rtr = kNoNode;
    for (NodeId v = 2; v < static_cast<NodeId>(t.size()); ++v) {
      if (t.node_string(v) == "t") tn = v;
      if (t.node_string(v) == "rtr") rtr = v;
    }
    CHECK(t.edge(tn, 'r') == rtr);
    CHECK(t.node_string(t.edge(rtr, 'e')) == "ertre");
  }
}

TEST_CASE("add returns new-palindrome indicator") {
  Eertree t = build_from_bytes("", Mode::Quick);
  std::size_t total = 0;
  for (unsigned char c : std::string("abacabadabacaba")) {
    const int r = t.add(c);
    CHECK((r == 0 || r == 1));
    total += static_cast<std::size_t>(r);
    CHECK(total == t.distinct_count());
  }
}

TEST_CASE("distinct palindromes match the oracle") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 60; ++it) {
    const std::string s = testutil::random_string(rng, 80, it % 2 ? 2 : 3);
    const auto expect = oracle::pal_set(to_word(s));
    for (Mode mode : {Mode::Basic, Mode::Quick, Mode::Direct}) {
      Eertree t = build_from_bytes(s, mode);
      CHECK(t.distinct_count() == expect.size());
      std::set<std::string> got = node_strings(t);
      std::set<std::string> want;
      for (const auto& w : expect) want.insert(testutil::to_bytes(w));
      CHECK(got == want);
    }
  }
}

TEST_CASE("theta palindromes") {
  Options opt;
  opt.sigma = 256;
  opt.mode = Mode::Quick;
  std::vector<Symbol> theta(256);
  for (std::size_t i = 0; i < 256; ++i) theta[i] = static_cast<Symbol>(i);
  theta['A'] = 'T';
  theta['T'] = 'A';
  theta['C'] = 'G';
  theta['G'] = 'C';
  opt.theta = theta;
  std::mt19937_64 rng(11);
  const std::string alpha = "ACGT";
  for (int it = 0; it < 40; ++it) {
    std::string s;
    std::uniform_int_distribution<std::size_t> len(0, 40);
    std::uniform_int_distribution<int> sym(0, 3);
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) s.push_back(alpha[static_cast<std::size_t>(sym(rng))]);
    Eertree t = Eertree::from_bytes(s, opt);
    const auto expect = oracle::pal_set(to_word(s), theta);
    CHECK(t.distinct_count() == expect.size());
    CHECK(node_strings(t) == [&] {
      std::set<std::string> w;
      for (const auto& p : expect) w.insert(testutil::to_bytes(p));
      return w;
    }());
  }
}

TEST_CASE("theta maxSuf can be empty") {
  Options opt;
  opt.sigma = 256;
  std::vector<Symbol> theta(256);
  for (std::size_t i = 0; i < 256; ++i) theta[i] = static_cast<Symbol>(i);
  theta['A'] = 'T';
  theta['T'] = 'A';
  opt.theta = theta;
  Eertree t(opt);
  CHECK(t.add('A') == 0);  // "A" is not a theta-palindrome
  CHECK(t.max_suf() == kRootZero);
  CHECK(t.add('T') == 1);  // "AT" is
  CHECK(t.node_string(t.max_suf()) == "AT");
}

TEST_CASE("pop restores state exactly") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 30; ++it) {
    Eertree t = build_from_bytes("", Mode::Direct, 3);
    std::string text;
    std::uniform_int_distribution<int> coin(0, 2);
    for (int step = 0; step < 400; ++step) {
      if (!text.empty() && coin(rng) == 0) {
        t.pop();
        text.pop_back();
      } else {
        const char c = static_cast<char>(coin(rng));
        t.add(static_cast<Symbol>(static_cast<unsigned char>(c)));
        text.push_back(c);
      }
      Eertree fresh = build_from_bytes(text, Mode::Direct, 3);
      REQUIRE(t.size() == fresh.size());
      REQUIRE(t.max_suf() == fresh.max_suf());
      for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v) {
        REQUIRE(t.node_len(v) == fresh.node_len(v));
        REQUIRE(t.node_link(v) == fresh.node_link(v));
        REQUIRE(t.occ_as_max(v) == fresh.occ_as_max(v));
        REQUIRE(t.node_edges(v) == fresh.node_edges(v));
      }
    }
  }
}

TEST_CASE("pop on empty throws") {
  Eertree t = build_from_bytes("a", Mode::Basic);
  t.pop();
  CHECK_THROWS_AS(t.pop(), std::logic_error);
}

TEST_CASE("node budget") {
  Options opt;
  opt.sigma = 256;
  opt.max_nodes = 3;
  Eertree t(opt);
  t.add('a');
  t.add('b');
  t.add('c');
  CHECK_THROWS_AS(t.add('d'), ResourceLimitError);
}

TEST_CASE("multi-string boundary") {
  Eertree t = build_from_bytes("ab", Mode::Quick);
  t.start_new_string();
  t.add('b');
  t.add('a');
  // "bb" or "aba" would need to span the boundary; neither may exist.
  const auto names = node_strings(t);
  CHECK(names == std::set<std::string>{"a", "b"});
}

TEST_CASE("invalid construction") {
  Options opt;
  opt.sigma = 4;
  opt.theta = {1, 0, 3};  // wrong size
  CHECK_THROWS_AS(Eertree{opt}, std::invalid_argument);
  opt.theta = {1, 2, 3, 0};  // not an involution
  CHECK_THROWS_AS(Eertree{opt}, std::invalid_argument);
  Eertree ok = build_from_bytes("", Mode::Basic, 2);
  CHECK_THROWS_AS(ok.add(5), std::out_of_range);
}
