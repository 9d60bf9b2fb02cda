#include "eertree/multi.hpp"

#include <stdexcept>

namespace eertree {

JointEertree::JointEertree(std::size_t k, Options opt) : tree_(std::move(opt)), k_(k) {
  if (k_ == 0) throw std::invalid_argument("joint eertree needs at least one string");
  flags_.assign(tree_.size() * word_count(), 0);
}

bool JointEertree::bit(NodeId v, std::size_t i) const {
  const std::size_t w = static_cast<std::size_t>(v) * word_count() + i / 64;
  return (flags_[w] >> (i % 64)) & 1;
}

void JointEertree::set_bit(NodeId v, std::size_t i) {
  const std::size_t w = static_cast<std::size_t>(v) * word_count() + i / 64;
  flags_[w] |= std::uint64_t{1} << (i % 64);
}

void JointEertree::add_string(const std::vector<Symbol>& s) {
  if (ingested_ >= k_) throw std::logic_error("all strings already ingested");
  if (finalized_) throw std::logic_error("joint eertree already finalized");
  tree_.start_new_string();
  std::vector<std::int64_t> snap;
  snap.reserve(tree_.size());
  for (NodeId v = 0; v < static_cast<NodeId>(tree_.size()); ++v)
    snap.push_back(tree_.occ_as_max(v));
  snapshots_.push_back(std::move(snap));
  for (Symbol c : s) {
    tree_.add(c);
    flags_.resize(tree_.size() * word_count(), 0);
    set_bit(tree_.max_suf(), ingested_);
  }
  ++ingested_;
}

void JointEertree::add_string(std::string_view bytes) {
  std::vector<Symbol> s;
  s.reserve(bytes.size());
  for (unsigned char b : bytes) s.push_back(b);
  add_string(s);
}

void JointEertree::finalize() {
  if (finalized_) return;
  if (ingested_ != k_) throw std::logic_error("queries need all strings ingested");
  std::vector<std::int64_t> snap;
  for (NodeId v = 0; v < static_cast<NodeId>(tree_.size()); ++v)
    snap.push_back(tree_.occ_as_max(v));
  snapshots_.push_back(std::move(snap));
  // During ingestion only maxSuf nodes are marked; every proper suffix
  // palindrome occurs wherever a marked ancestor does, so one descending
  // pass ORs each node's mask into its suffix link.
  const std::size_t wc = word_count();
  for (NodeId v = static_cast<NodeId>(tree_.size()) - 1; v >= 2; --v) {
    const std::size_t src = static_cast<std::size_t>(v) * wc;
    const std::size_t dst = static_cast<std::size_t>(tree_.node_link(v)) * wc;
    for (std::size_t w = 0; w < wc; ++w) flags_[dst + w] |= flags_[src + w];
  }
  finalized_ = true;
}

bool JointEertree::in_string(NodeId v, std::size_t i) const {
  if (i >= k_) throw std::out_of_range("string index");
  if (!finalized_) throw std::logic_error("joint eertree not finalized");
  return bit(v, i);
}

std::int64_t JointEertree::common_count() {
  finalize();
  std::int64_t count = 0;
  for (NodeId v = 2; v < static_cast<NodeId>(tree_.size()); ++v) {
    bool all = true;
    for (std::size_t i = 0; all && i < k_; ++i) all = bit(v, i);
    count += all;
  }
  return count;
}

std::optional<std::vector<Symbol>> JointEertree::longest_common() {
  finalize();
  NodeId best = kNoNode;
  for (NodeId v = 2; v < static_cast<NodeId>(tree_.size()); ++v) {
    bool all = true;
    for (std::size_t i = 0; all && i < k_; ++i) all = bit(v, i);
    if (all && (best == kNoNode || tree_.node_len(v) > tree_.node_len(best))) best = v;
  }
  if (best == kNoNode) return std::nullopt;
  return tree_.node_symbols(best);
}

std::vector<std::int64_t> JointEertree::occ_in_string(std::size_t i) {
  finalize();
  if (i >= k_) throw std::out_of_range("string index");
  const auto& before = snapshots_[i];
  const auto& after = snapshots_[i + 1];
  std::vector<std::int64_t> occ(tree_.size(), 0);
  for (std::size_t v = 0; v < after.size(); ++v)
    occ[v] = after[v] - (v < before.size() ? before[v] : 0);
  for (NodeId v = static_cast<NodeId>(tree_.size()) - 1; v >= 2; --v)
    occ[static_cast<std::size_t>(tree_.node_link(v))] += occ[static_cast<std::size_t>(v)];
  return occ;
}

std::int64_t JointEertree::occ_dominance(std::size_t a, std::size_t b) {
  const auto occ_a = occ_in_string(a);
  const auto occ_b = occ_in_string(b);
  std::int64_t count = 0;
  for (NodeId v = 2; v < static_cast<NodeId>(tree_.size()); ++v)
    count += occ_a[static_cast<std::size_t>(v)] > occ_b[static_cast<std::size_t>(v)];
  return count;
}

std::int64_t JointEertree::equal_palindrome_triples(std::size_t a, std::size_t b) {
  const auto occ_a = occ_in_string(a);
  const auto occ_b = occ_in_string(b);
  std::int64_t total = 0;
  for (NodeId v = 2; v < static_cast<NodeId>(tree_.size()); ++v)
    total += occ_a[static_cast<std::size_t>(v)] * occ_b[static_cast<std::size_t>(v)];
  return total;
}

}  // namespace eertree
