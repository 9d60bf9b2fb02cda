#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eertree/edge_map.hpp"
#include "eertree/persistent_map.hpp"
#include "eertree/types.hpp"

namespace eertree {

using VersionId = std::int32_t;

// Fully persistent eertree over a tree of string versions. Version 0 is the
// empty string; add_version(v, c) derives string(v)+c as a new version in
// O(log |v|) time and space, never touching older versions. Palindrome nodes
// live in one shared arena; each version keeps its own maxSuf, a persistent
// set of the palindromes it contains, and a binary-lifting ancestor table
// through which any symbol of its string is recovered in O(log |v|) hops.
class PersistentEertree {
 public:
  explicit PersistentEertree(std::uint32_t sigma = 256);

  VersionId root() const { return 0; }
  std::size_t version_count() const { return versions_.size(); }

  VersionId add_version(VersionId v, Symbol c);

  std::size_t version_length(VersionId v) const;
  Symbol symbol_at(VersionId v, std::size_t i) const;  // 1-based
  std::size_t version_distinct_count(VersionId v) const;
  // The version's longest suffix-palindrome; nullopt for the empty version.
  std::optional<std::vector<Symbol>> version_max_suf(VersionId v) const;
  std::vector<Symbol> version_symbols(VersionId v) const;
  std::string version_string(VersionId v) const;

  std::size_t arena_size() const { return nodes_.size(); }  // incl. both roots

  // Allocation instrumentation, for the per-call O(log) space bound.
  std::size_t palset_allocated() const { return palsets_.allocated(); }
  std::size_t direct_allocated() const { return direct_store_.allocated(); }
  std::size_t pred_slots() const { return pred_slots_; }

 private:
  struct ENode {
    std::int32_t len = 0;
    NodeId link = kRootNeg;
    NodeId parent = kNoNode;
    Symbol sym = 0;
    std::int32_t direct_ver = -1;
    EdgeMap edges;
  };

  struct VNode {
    Symbol sym = 0;
    std::int32_t len = 0;
    VersionId parent = -1;
    NodeId max_suf = kRootZero;
    std::int32_t palset_ver = -1;
    std::vector<VersionId> pred;  // pred[i] = ancestor 2^i levels up
  };

  const ENode& node(NodeId v) const { return nodes_[static_cast<std::size_t>(v)]; }
  const VNode& version(VersionId v) const;
  VersionId ancestor(VersionId v, std::int32_t dist) const;
  NodeId create_node(NodeId x, Symbol c, VersionId parent_version);
  std::vector<Symbol> node_symbols(NodeId v) const;

  std::uint32_t sigma_;
  std::vector<ENode> nodes_;
  std::vector<VNode> versions_;
  PersistentMap<Symbol, NodeId> direct_store_;
  PersistentMap<NodeId, char> palsets_;
  std::size_t pred_slots_ = 0;
};

}  // namespace eertree
