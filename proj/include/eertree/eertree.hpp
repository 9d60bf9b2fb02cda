#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eertree/edge_map.hpp"
#include "eertree/persistent_map.hpp"
#include "eertree/types.hpp"

namespace eertree {

struct Options {
  std::uint32_t sigma = 256;
  Mode mode = Mode::Basic;
  // Symbol involution with theta(theta(c)) == c; empty means identity.
  // With a non-identity theta the tree indexes theta-palindromes.
  std::vector<Symbol> theta{};
  // sigma <= threshold: per-node direct slot arrays instead of sorted maps.
  std::uint32_t dense_edge_threshold = 4;
  std::size_t max_nodes = 0;  // palindrome-node budget, 0 = unlimited
  std::size_t reserve = 0;    // expected final length, if known
};

// The palindromic tree: one node per distinct (theta-)subpalindrome of the
// processed text, plus the two roots of lengths 0 and -1. Supports online
// add() in four walk modes, pop() with full state restoration, and joint
// multi-string construction via start_new_string().
//
// Single writer; safe to read concurrently from any quiescent point.
class Eertree {
 public:
  explicit Eertree(Options opt);

  static Eertree from_bytes(std::string_view bytes, Options opt);

  // Appends c. Returns 1 iff a new palindrome (node) appeared.
  int add(Symbol c);

  // Removes the last appended symbol, restoring the exact prior state.
  void pop();

  // Joint-eertree support: further add() calls start a new string whose
  // palindromes never span the boundary. Clears the undo stack.
  void start_new_string();

  std::size_t size() const { return nodes_.size(); }             // incl. roots
  std::size_t distinct_count() const { return nodes_.size() - 2; }
  std::size_t edge_count() const;
  NodeId max_suf() const { return max_suf_; }
  const std::vector<Symbol>& text() const { return text_; }
  std::size_t current_string_start() const { return text_start_; }

  std::int32_t node_len(NodeId v) const { return at(v).len; }
  NodeId node_link(NodeId v) const { return at(v).link; }
  NodeId node_quick_link(NodeId v) const { return at(v).quick; }
  NodeId node_series_link(NodeId v) const { return at(v).series; }
  std::int32_t node_diff(NodeId v) const { return at(v).diff; }
  NodeId node_parent(NodeId v) const { return at(v).parent; }
  Symbol node_symbol(NodeId v) const { return at(v).sym; }
  std::int32_t suf_count(NodeId v) const { return at(v).suf_count; }
  std::int64_t occ_as_max(NodeId v) const { return at(v).occ_as_max; }
  NodeId edge(NodeId v, Symbol c) const;
  std::vector<std::pair<Symbol, NodeId>> node_edges(NodeId v) const;

  // The node's palindrome, leftmost symbol first.
  std::vector<Symbol> node_symbols(NodeId v) const;
  // Same, with symbols narrowed to bytes (handy for tests over ASCII input).
  std::string node_string(NodeId v) const;

  std::uint32_t sigma() const { return sigma_; }
  Mode mode() const { return mode_; }
  bool has_theta() const { return !theta_.empty(); }
  const std::vector<Symbol>& theta() const { return theta_; }
  bool dense_edges() const { return dense_edges_; }
  const Stats& stats() const { return stats_; }

  // Direct-link lookup (Direct mode): longest suffix-palindrome of v
  // preceded in v by c; kRootZero means "v ends with c, nothing longer".
  std::optional<NodeId> direct_link(NodeId v, Symbol c) const;

  // Assembles a tree from explicit structure (offline builder, JSON import).
  // `parents[i]`/`syms[i]`/`lens[i]`/`links[i]` describe palindrome node
  // internal id i+2. Occurrence counters are left at zero and quick links
  // unset: assembled trees serve queries, export and comparison.
  struct NodeSpec {
    std::int32_t len;
    NodeId parent;
    Symbol sym;
    NodeId link;
  };
  static Eertree from_structure(Options opt, std::vector<Symbol> text,
                                const std::vector<NodeSpec>& specs, NodeId max_suf);

 private:
  struct Node {
    std::int32_t len = 0;
    NodeId link = kRootNeg;
    NodeId quick = kRootNeg;
    NodeId series = kRootNeg;
    std::int32_t diff = 0;
    NodeId parent = kNoNode;
    Symbol sym = 0;
    std::int32_t suf_count = 0;
    std::int64_t occ_as_max = 0;
    std::int32_t direct_ver = -1;  // PersistentMap version, Direct mode
    EdgeMap edges;
  };

  struct Undo {
    NodeId prev_max_suf;
    bool created;
    std::size_t map_watermark;
  };

  const Node& at(NodeId v) const;
  Node& at(NodeId v);

  bool matches(NodeId v, Symbol target) const {
    auto pos = static_cast<std::ptrdiff_t>(text_.size()) - 2 - at(v).len;
    return pos >= static_cast<std::ptrdiff_t>(text_start_) && text_[static_cast<std::size_t>(pos)] == target;
  }

  NodeId walk(NodeId start, Symbol target, bool skip_start);
  NodeId walk_basic(NodeId v, Symbol target);
  NodeId walk_quick(NodeId v, Symbol target);
  NodeId walk_series(NodeId v, Symbol target);
  NodeId walk_direct(NodeId from, Symbol target, bool skip_start);

  NodeId create_node(NodeId parent, Symbol c, Symbol target);

  std::vector<Node> nodes_;
  std::vector<Symbol> text_;
  std::size_t text_start_ = 0;
  NodeId max_suf_ = kRootZero;
  Mode mode_;
  std::uint32_t sigma_;
  std::vector<Symbol> theta_;
  bool dense_edges_;
  std::size_t max_nodes_;
  PersistentMap<Symbol, NodeId> direct_store_;
  std::vector<Undo> history_;
  Stats stats_;
};

// Byte convenience used all over the tests: identity alphabet over bytes.
Eertree build_from_bytes(std::string_view bytes, Mode mode = Mode::Basic,
                         std::uint32_t sigma = 256);

}  // namespace eertree
