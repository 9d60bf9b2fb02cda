#include "eertree/persistent.hpp"

#include <stdexcept>

namespace eertree {

PersistentEertree::PersistentEertree(std::uint32_t sigma) : sigma_(sigma) {
  if (sigma_ < 1) throw std::invalid_argument("sigma must be >= 1");
  ENode neg;
  neg.len = -1;
  neg.link = kRootNeg;
  nodes_.push_back(std::move(neg));
  ENode zero;
  zero.len = 0;
  zero.link = kRootNeg;
  nodes_.push_back(std::move(zero));
  VNode root;
  root.palset_ver = PersistentMap<NodeId, char>::kEmptyVersion;
  versions_.push_back(std::move(root));
}

const PersistentEertree::VNode& PersistentEertree::version(VersionId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= versions_.size())
    throw std::out_of_range("unknown VersionId");
  return versions_[static_cast<std::size_t>(v)];
}

VersionId PersistentEertree::ancestor(VersionId v, std::int32_t dist) const {
  for (std::size_t i = 0; dist != 0; ++i, dist >>= 1)
    if (dist & 1) v = versions_[static_cast<std::size_t>(v)].pred[i];
  return v;
}

std::size_t PersistentEertree::version_length(VersionId v) const {
  return static_cast<std::size_t>(version(v).len);
}

Symbol PersistentEertree::symbol_at(VersionId v, std::size_t i) const {
  const VNode& vn = version(v);
  if (i < 1 || i > static_cast<std::size_t>(vn.len))
    throw std::out_of_range("symbol position");
  const VersionId z = ancestor(v, vn.len - static_cast<std::int32_t>(i));
  return versions_[static_cast<std::size_t>(z)].sym;
}

std::size_t PersistentEertree::version_distinct_count(VersionId v) const {
  return static_cast<std::size_t>(palsets_.size(version(v).palset_ver));
}

std::vector<Symbol> PersistentEertree::node_symbols(NodeId v) const {
  std::vector<Symbol> half;
  bool odd = false;
  NodeId u = v;
  while (u != kRootNeg && u != kRootZero) {
    half.push_back(node(u).sym);
    if (node(u).parent == kRootNeg) odd = true;
    u = node(u).parent;
  }
  std::vector<Symbol> out;
  out.reserve(2 * half.size());
  for (std::size_t i = 0; i + (odd ? 1 : 0) < half.size(); ++i) out.push_back(half[i]);
  for (auto it = half.rbegin(); it != half.rend(); ++it) out.push_back(*it);
  return out;
}

std::optional<std::vector<Symbol>> PersistentEertree::version_max_suf(VersionId v) const {
  const VNode& vn = version(v);
  if (vn.max_suf == kRootZero) return std::nullopt;
  return node_symbols(vn.max_suf);
}

std::vector<Symbol> PersistentEertree::version_symbols(VersionId v) const {
  const VNode& vn = version(v);
  std::vector<Symbol> out(static_cast<std::size_t>(vn.len));
  VersionId u = v;
  for (std::size_t i = out.size(); i > 0; --i) {
    out[i - 1] = versions_[static_cast<std::size_t>(u)].sym;
    u = versions_[static_cast<std::size_t>(u)].pred[0];
  }
  return out;
}

std::string PersistentEertree::version_string(VersionId v) const {
  std::string s;
  for (Symbol c : version_symbols(v)) s.push_back(static_cast<char>(c));
  return s;
}

NodeId PersistentEertree::create_node(NodeId x, Symbol c, VersionId parent_version) {
  const NodeId id = static_cast<NodeId>(nodes_.size());
  ENode n;
  n.len = x == kRootNeg ? 1 : node(x).len + 2;
  n.parent = x;
  n.sym = c;
  if (n.len == 1) {
    n.link = kRootZero;
  } else {
    // Second direct-link hop: next suffix palindrome preceded by c after x.
    const NodeId* hit = direct_store_.find(node(x).direct_ver, c);
    const NodeId y = hit ? *hit : kRootNeg;
    n.link = node(y).edges.get(c);
    if (n.link == kNoNode)
      throw std::logic_error("suffix-link target missing in shared arena");
  }
  // New-version string is string(parent_version) + c, length len(parent)+1.
  // The symbol preceding link[id] at the string's end seeds the direct map.
  const std::int32_t pos = version(parent_version).len + 1 - node(n.link).len;
  const Symbol b = pos == version(parent_version).len + 1
                       ? c
                       : symbol_at(parent_version, static_cast<std::size_t>(pos));
  n.direct_ver = direct_store_.insert(node(n.link).direct_ver, b, n.link);
  nodes_[static_cast<std::size_t>(x)].edges.set(c, id);
  nodes_.push_back(std::move(n));
  return id;
}

VersionId PersistentEertree::add_version(VersionId v, Symbol c) {
  const VNode& vn = version(v);
  if (c >= sigma_) throw std::out_of_range("symbol out of alphabet range");

  // Longest suffix palindrome x of string(v) preceded by c (rootNeg stands
  // for the empty continuation giving the single-symbol palindrome).
  const NodeId ms = vn.max_suf;
  NodeId x = kRootNeg;
  const std::int32_t pos = vn.len - node(ms).len;  // symbol index before ms
  if (ms != kRootZero && pos >= 1 && symbol_at(v, static_cast<std::size_t>(pos)) == c) {
    x = ms;
  } else if (ms != kRootZero) {
    if (const NodeId* hit = direct_store_.find(node(ms).direct_ver, c)) x = *hit;
  }
  // x == kRootZero from the map means "ms ends with c": extension "cc".
  NodeId target = node(x).edges.get(c);
  if (target == kNoNode) target = create_node(x, c, v);

  VNode u;
  u.sym = c;
  u.len = vn.len + 1;
  u.parent = v;
  u.max_suf = target;
  if (palsets_.find(vn.palset_ver, target)) {
    u.palset_ver = vn.palset_ver;  // already present: share the set version
  } else {
    u.palset_ver = palsets_.insert(vn.palset_ver, target, 1);
  }
  u.pred.push_back(v);
  for (std::size_t i = 0;; ++i) {
    const VersionId z = u.pred[i];
    const VNode& zn = versions_[static_cast<std::size_t>(z)];
    if (i >= zn.pred.size()) break;
    u.pred.push_back(zn.pred[i]);
  }
  pred_slots_ += u.pred.size();
  versions_.push_back(std::move(u));
  return static_cast<VersionId>(versions_.size() - 1);
}

}  // namespace eertree
