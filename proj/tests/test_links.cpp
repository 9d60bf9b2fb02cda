#include <doctest.h>

#include <cmath>

#include "eertree/eertree.hpp"
#include "eertree/oracle.hpp"
#include "util.hpp"

using namespace eertree;
using testutil::to_word;

TEST_CASE("quick-link walk on the aabaabaaba example") {
  Eertree t = build_from_bytes("aabaabaaba", Mode::Quick);
  CHECK(t.node_string(t.max_suf()) == "abaabaaba");
  const std::uint64_t jumps_before = t.stats().quick_jumps;
  t.add('b');
  CHECK(t.node_string(t.max_suf()) == "bab");
  CHECK(t.stats().quick_jumps - jumps_before == 1);
}

TEST_CASE("suffix-link walks are amortized linear in basic mode") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 20; ++it) {
    const std::string s = testutil::random_string(rng, 500, 2);
    Eertree t = build_from_bytes(s, Mode::Basic);
    CHECK(t.stats().link_steps <= 2 * s.size());
    CHECK(t.stats().link_steps_secondary <= 2 * s.size());
  }
}

TEST_CASE("quick-link chains are logarithmic") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10; ++it) {
    const std::string s = testutil::random_string(rng, 2000, 2);
    if (s.empty()) continue;
    Eertree t = build_from_bytes(s, Mode::Quick);
    const double bound = 2.0 * std::log2(static_cast<double>(s.size()) + 2) + 2;
    for (NodeId v = 2; v < static_cast<NodeId>(t.size()); ++v) {
      int hops = 0;
      for (NodeId u = v; u != kRootNeg; u = t.node_quick_link(u)) ++hops;
      CHECK(hops <= bound);
    }
  }
}

TEST_CASE("direct links match their definition") {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 30; ++it) {
    std::string s = testutil::random_string(rng, 40, 2);
    for (char& c : s) c = static_cast<char>(c - 'a');
    Eertree t = build_from_bytes(s, Mode::Direct, 2);
    for (NodeId v = 2; v < static_cast<NodeId>(t.size()); ++v) {
      const std::string w = t.node_string(v);
      for (Symbol c = 0; c < 2; ++c) {
        // Longest proper suffix-palindrome of w preceded in w by c; the
        // length-0 root stands for "w ends with c".
        std::string best;
        bool found = false;
        for (std::size_t len = 0; len < w.size(); ++len) {
          const std::string suf = w.substr(w.size() - len);
          if (len > 0 && !oracle::is_palindrome(to_word(suf))) continue;
          if (w.size() >= len + 1 &&
              static_cast<unsigned char>(w[w.size() - len - 1]) == c) {
            best = suf;
            found = true;
          }
        }
        const auto link = t.direct_link(v, c);
        if (!found) {
          CHECK(!link.has_value());
        } else {
          REQUIRE(link.has_value());
          if (best.empty())
            CHECK(*link == kRootZero);
          else
            CHECK(t.node_string(*link) == best);
        }
      }
    }
  }
}

TEST_CASE("series links partition the suffix chain") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 20; ++it) {
    const std::string s = testutil::random_string(rng, 300, 2);
    Options opt;
    opt.sigma = 256;
    opt.mode = Mode::Series;
    Eertree t = Eertree::from_bytes(s, opt);
    for (NodeId v = 2; v < static_cast<NodeId>(t.size()); ++v) {
      CHECK(t.node_diff(v) == t.node_len(v) - t.node_len(t.node_link(v)));
      const NodeId link = t.node_link(v);
      if (t.node_diff(link) == t.node_diff(v))
        CHECK(t.node_series_link(v) == t.node_series_link(link));
      else
        CHECK(t.node_series_link(v) == link);
    }
  }
}

TEST_CASE("all modes build the same structure") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 25; ++it) {
    const std::string s = testutil::random_string(rng, 150, 3);
    Eertree basic = build_from_bytes(s, Mode::Basic);
    for (Mode mode : {Mode::Quick, Mode::Direct, Mode::Series}) {
      Options opt;
      opt.sigma = 256;
      opt.mode = mode;
      Eertree other = Eertree::from_bytes(s, opt);
      REQUIRE(other.size() == basic.size());
      for (NodeId v = 0; v < static_cast<NodeId>(basic.size()); ++v) {
        REQUIRE(other.node_len(v) == basic.node_len(v));
        REQUIRE(other.node_link(v) == basic.node_link(v));
        REQUIRE(other.node_edges(v) == basic.node_edges(v));
      }
      CHECK(other.max_suf() == basic.max_suf());
    }
  }
}

TEST_CASE("dense and sparse edge layouts agree") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 10; ++it) {
    const std::string s = testutil::random_string(rng, 120, 2);
    Options dense;
    dense.sigma = 2;
    dense.dense_edge_threshold = 4;  // sigma 2 -> slot arrays
    std::string mapped = s;
    for (char& c : mapped) c = static_cast<char>(c - 'a');
    Eertree a = Eertree::from_bytes(mapped, dense);
    Eertree b = build_from_bytes(s, Mode::Basic);  // sparse, bytes
    CHECK(a.distinct_count() == b.distinct_count());
    CHECK(a.edge_count() == b.edge_count());
  }
}
