#include "eertree/eertree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace eertree {

namespace {

void check_theta(std::uint32_t sigma, const std::vector<Symbol>& theta) {
  if (theta.empty()) return;
  if (theta.size() != sigma)
    throw std::invalid_argument("theta table must cover the whole alphabet");
  for (Symbol c = 0; c < sigma; ++c) {
    if (theta[c] >= sigma || theta[theta[c]] != c)
      throw std::invalid_argument("theta is not an involution");
  }
}

}  // namespace

Eertree::Eertree(Options opt)
    : mode_(opt.mode),
      sigma_(opt.sigma),
      theta_(std::move(opt.theta)),
      dense_edges_(opt.sigma <= opt.dense_edge_threshold),
      max_nodes_(opt.max_nodes) {
  if (sigma_ < 1) throw std::invalid_argument("sigma must be >= 1");
  check_theta(sigma_, theta_);
  if (opt.reserve) {
    nodes_.reserve(opt.reserve + 2);
    text_.reserve(opt.reserve);
  }
  const std::uint32_t dense = dense_edges_ ? sigma_ : 0;
  Node neg;
  neg.len = -1;
  neg.link = kRootNeg;  // link[-1] = -1
  neg.edges = EdgeMap(dense);
  nodes_.push_back(std::move(neg));
  Node zero;
  zero.len = 0;
  zero.link = kRootNeg;  // link[0] = -1
  zero.edges = EdgeMap(dense);
  nodes_.push_back(std::move(zero));
}

Eertree Eertree::from_bytes(std::string_view bytes, Options opt) {
  Eertree t(std::move(opt));
  for (unsigned char b : bytes) t.add(static_cast<Symbol>(b));
  return t;
}

Eertree build_from_bytes(std::string_view bytes, Mode mode, std::uint32_t sigma) {
  Options opt;
  opt.sigma = sigma;
  opt.mode = mode;
  opt.reserve = bytes.size();
  return Eertree::from_bytes(bytes, std::move(opt));
}

const Eertree::Node& Eertree::at(NodeId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= nodes_.size())
    throw std::out_of_range("unknown NodeId");
  return nodes_[static_cast<std::size_t>(v)];
}

Eertree::Node& Eertree::at(NodeId v) {
  return const_cast<Node&>(std::as_const(*this).at(v));
}

NodeId Eertree::edge(NodeId v, Symbol c) const {
  if (c >= sigma_) throw std::out_of_range("symbol out of alphabet range");
  return at(v).edges.get(c);
}

std::vector<std::pair<Symbol, NodeId>> Eertree::node_edges(NodeId v) const {
  std::vector<std::pair<Symbol, NodeId>> out;
  at(v).edges.for_each([&](Symbol c, NodeId u) { out.emplace_back(c, u); });
  return out;
}

std::size_t Eertree::edge_count() const {
  std::size_t n = 0;
  for (const Node& node : nodes_) n += node.edges.size();
  return n;
}

std::vector<Symbol> Eertree::node_symbols(NodeId v) const {
  at(v);  // bounds check
  // Edge labels on the path root -> v spell the right half of v; the left
  // half mirrors it through theta. An edge (p, c) spells theta(c) . p . c.
  std::vector<Symbol> half;  // right half, v -> root order
  bool odd = false;
  NodeId u = v;
  while (u != kRootNeg && u != kRootZero) {
    half.push_back(at(u).sym);
    if (at(u).parent == kRootNeg) odd = true;
    u = at(u).parent;
  }
  std::vector<Symbol> out;
  out.reserve(2 * half.size());
  for (std::size_t i = 0; i + (odd ? 1 : 0) < half.size(); ++i)
    out.push_back(theta_.empty() ? half[i] : theta_[half[i]]);
  for (auto it = half.rbegin(); it != half.rend(); ++it) out.push_back(*it);
  return out;
}

std::string Eertree::node_string(NodeId v) const {
  std::string s;
  for (Symbol c : node_symbols(v)) s.push_back(static_cast<char>(c));
  return s;
}

std::optional<NodeId> Eertree::direct_link(NodeId v, Symbol c) const {
  at(v);
  if (c >= sigma_) throw std::out_of_range("symbol out of alphabet range");
  if (const NodeId* hit = direct_store_.find(at(v).direct_ver, c)) return *hit;
  return std::nullopt;
}

NodeId Eertree::walk_basic(NodeId v, Symbol target) {
  while (!matches(v, target)) {
    if (v == kRootNeg) return kNoNode;
    v = at(v).link;
    ++stats_.link_steps;
    ++stats_.last_call_transitions;
  }
  return v;
}

NodeId Eertree::walk_quick(NodeId v, Symbol target) {
  while (true) {
    if (matches(v, target)) return v;
    if (v == kRootNeg) return kNoNode;
    NodeId u = at(v).link;
    ++stats_.link_steps;
    ++stats_.last_call_transitions;
    if (matches(u, target)) return u;
    if (u == kRootNeg) return kNoNode;
    // Everything between link[v] and quickLink[v] is preceded by the same
    // symbol as link[v], so it is safe to skip.
    v = at(v).quick;
    ++stats_.quick_jumps;
    ++stats_.last_call_transitions;
  }
}

NodeId Eertree::walk_series(NodeId v, Symbol target) {
  if (matches(v, target)) return v;
  while (true) {
    if (v == kRootNeg) return kNoNode;
    NodeId u = at(v).link;
    if (matches(u, target)) return u;
    if (u == kRootNeg) return kNoNode;
    // Members of v's series past link[v] share link[v]'s preceding symbol.
    v = at(v).series;
    ++stats_.series_steps;
    ++stats_.last_call_transitions;
    if (matches(v, target)) return v;
  }
}

NodeId Eertree::walk_direct(NodeId from, Symbol target, bool skip_start) {
  ++stats_.last_call_transitions;
  if (!skip_start && matches(from, target)) return from;
  if (from != kRootNeg) {
    if (const NodeId* hit = direct_store_.find(at(from).direct_ver, target)) return *hit;
  }
  return matches(kRootNeg, target) ? kRootNeg : kNoNode;
}

// Longest suffix-palindrome of the current text (including the just-appended
// symbol's predecessor role) preceded by `target`; starts from `start`.
// skip_start: exclude `start` itself (second walk, for the suffix link).
NodeId Eertree::walk(NodeId start, Symbol target, bool skip_start) {
  switch (mode_) {
    case Mode::Basic:
      return walk_basic(skip_start ? at(start).link : start, target);
    case Mode::Quick:
      return walk_quick(skip_start ? at(start).link : start, target);
    case Mode::Series:
      return walk_series(skip_start ? at(start).link : start, target);
    case Mode::Direct:
      return walk_direct(start, target, skip_start);
  }
  return kNoNode;
}

NodeId Eertree::create_node(NodeId parent, Symbol c, Symbol target) {
  if (max_nodes_ != 0 && nodes_.size() - 2 >= max_nodes_)
    throw ResourceLimitError("eertree node budget exceeded");
  const NodeId id = static_cast<NodeId>(nodes_.size());
  Node n;
  n.len = parent == kRootNeg ? 1 : at(parent).len + 2;
  n.parent = parent;
  n.sym = c;
  n.edges = EdgeMap(dense_edges_ ? sigma_ : 0);

  // Suffix link: continue the search past `parent`.
  if (n.len == 1) {
    n.link = kRootZero;
  } else {
    const std::uint64_t before = stats_.link_steps;
    NodeId x = walk(parent, target, /*skip_start=*/true);
    stats_.link_steps_secondary += stats_.link_steps - before;
    stats_.link_steps = before;
    n.link = x == kNoNode ? kRootZero : at(x).edges.get(c);
    assert(n.link != kNoNode);
  }

  n.diff = n.len - at(n.link).len;
  n.series = at(n.link).diff == n.diff ? at(n.link).series : n.link;
  n.suf_count = 1 + at(n.link).suf_count;

  const std::size_t sz = text_.size();
  // quickLink: longest suffix-palindrome preceded by a symbol other than
  // the one preceding link[v].
  if (at(n.link).len < 1) {
    n.quick = kRootNeg;
  } else {
    NodeId w = at(n.link).link;  // len >= 0 here
    Symbol b1 = text_[sz - static_cast<std::size_t>(at(n.link).len) - 1];
    Symbol b2 = text_[sz - static_cast<std::size_t>(at(w).len) - 1];
    n.quick = b1 == b2 ? at(n.link).quick : w;
  }

  if (mode_ == Mode::Direct) {
    // directLink[v] = directLink[link[v]] with entry [b] := link[v], where b
    // precedes link[v] in v (for link[v] = root 0 that is v's last symbol).
    Symbol b = text_[sz - static_cast<std::size_t>(at(n.link).len) - 1];
    std::size_t before = direct_store_.allocated();
    n.direct_ver = direct_store_.insert(at(n.link).direct_ver, b, n.link);
    stats_.map_allocations += direct_store_.allocated() - before;
  }

  at(parent).edges.set(c, id);
  nodes_.push_back(std::move(n));
  return id;
}

int Eertree::add(Symbol c) {
  if (c >= sigma_) throw std::out_of_range("symbol out of alphabet range");
  ++stats_.add_calls;
  stats_.last_call_transitions = 0;
  text_.push_back(c);
  const Symbol target = theta_.empty() ? c : theta_[c];

  Undo undo{max_suf_, false, direct_store_.allocated()};
  int created = 0;
  NodeId q = walk(max_suf_, target, /*skip_start=*/false);
  if (q == kNoNode) {
    // Only reachable with a non-identity theta: no suffix theta-palindrome.
    max_suf_ = kRootZero;
  } else {
    NodeId p = at(q).edges.get(c);
    if (p == kNoNode) {
      p = create_node(q, c, target);
      created = 1;
      undo.created = true;
    }
    max_suf_ = p;
  }
  ++at(max_suf_).occ_as_max;
  history_.push_back(undo);
  return created;
}

void Eertree::pop() {
  if (text_.size() <= text_start_) throw std::logic_error("pop on empty text");
  ++stats_.pop_calls;
  const Undo undo = history_.back();
  history_.pop_back();
  --at(max_suf_).occ_as_max;
  if (undo.created) {
    assert(max_suf_ == static_cast<NodeId>(nodes_.size()) - 1);
    const Node& last = nodes_.back();
    at(last.parent).edges.erase(last.sym);
    nodes_.pop_back();
    direct_store_.truncate(undo.map_watermark);
  }
  text_.pop_back();
  max_suf_ = undo.prev_max_suf;
}

void Eertree::start_new_string() {
  text_start_ = text_.size();
  max_suf_ = kRootZero;
  history_.clear();
}

Eertree Eertree::from_structure(Options opt, std::vector<Symbol> text,
                                const std::vector<NodeSpec>& specs, NodeId max_suf) {
  Eertree t(std::move(opt));
  t.text_ = std::move(text);
  for (const NodeSpec& s : specs) {
    Node n;
    n.len = s.len;
    n.parent = s.parent;
    n.sym = s.sym;
    n.link = s.link;
    n.quick = kNoNode;
    n.edges = EdgeMap(t.dense_edges_ ? t.sigma_ : 0);
    t.nodes_.push_back(std::move(n));
  }
  // Wire edges and derived per-node values in length order (links always
  // point to strictly shorter nodes).
  std::vector<NodeId> order;
  for (NodeId v = 2; v < static_cast<NodeId>(t.nodes_.size()); ++v) order.push_back(v);
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return t.at(a).len < t.at(b).len; });
  for (NodeId v = 2; v < static_cast<NodeId>(t.nodes_.size()); ++v)
    t.at(t.at(v).parent).edges.set(t.at(v).sym, v);
  for (NodeId v : order) {
    Node& n = t.at(v);
    n.diff = n.len - t.at(n.link).len;
    n.series = t.at(n.link).diff == n.diff ? t.at(n.link).series : n.link;
    n.suf_count = 1 + t.at(n.link).suf_count;
  }
  t.max_suf_ = max_suf;
  return t;
}

}  // namespace eertree
