#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

namespace eertree {

// Fully persistent ordered map over integer keys, implemented as a
// path-copying treap in a flat arena. Every insert produces a new version
// handle; all older versions stay readable. Priorities are a fixed hash of
// the key, so the tree shape for a given key set is deterministic.
//
// Updates allocate O(log k) arena nodes for a version of size k. The arena
// only grows; truncate() reclaims a suffix, which is valid exactly when the
// caller's insert/discard discipline is LIFO (the eertree's pop path).
template <class Key, class Value>
class PersistentMap {
 public:
  using VersionId = std::int32_t;
  static constexpr VersionId kEmptyVersion = -1;

  const Value* find(VersionId v, Key key) const {
    while (v != kEmptyVersion) {
      const Node& n = arena_[static_cast<std::size_t>(v)];
      if (key == n.key) return &n.value;
      v = key < n.key ? n.left : n.right;
    }
    return nullptr;
  }

  // New version with `key` mapped to `value` (replacing any previous entry).
  VersionId insert(VersionId v, Key key, Value value) {
    auto [lo, rest] = split(v, key);
    auto [mid, hi] = split(rest, key + 1);
    (void)mid;  // dropped: the replaced entry, if any
    VersionId leaf = make(key, value, kEmptyVersion, kEmptyVersion);
    return merge(merge(lo, leaf), hi);
  }

  std::int32_t size(VersionId v) const {
    return v == kEmptyVersion ? 0 : arena_[static_cast<std::size_t>(v)].count;
  }

  std::size_t allocated() const { return arena_.size(); }

  void truncate(std::size_t watermark) {
    if (watermark < arena_.size()) arena_.resize(watermark);
  }

  template <class F>
  void for_each(VersionId v, F&& f) const {
    if (v == kEmptyVersion) return;
    const Node& n = arena_[static_cast<std::size_t>(v)];
    for_each(n.left, f);
    f(n.key, n.value);
    for_each(n.right, f);
  }

 private:
  struct Node {
    Key key;
    Value value;
    VersionId left, right;
    std::int32_t count;
    std::uint64_t prio;
  };

  static std::uint64_t priority(Key key) {
    // splitmix64 finalizer
    std::uint64_t z = static_cast<std::uint64_t>(key) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  VersionId make(Key key, Value value, VersionId l, VersionId r) {
    std::int32_t cnt = 1 + size(l) + size(r);
    arena_.push_back(Node{key, value, l, r, cnt, priority(key)});
    return static_cast<VersionId>(arena_.size() - 1);
  }

  // (keys < key, keys >= key)
  std::pair<VersionId, VersionId> split(VersionId v, Key key) {
    if (v == kEmptyVersion) return {kEmptyVersion, kEmptyVersion};
    Node n = arena_[static_cast<std::size_t>(v)];
    if (n.key < key) {
      auto [l, r] = split(n.right, key);
      return {make(n.key, n.value, n.left, l), r};
    }
    auto [l, r] = split(n.left, key);
    return {l, make(n.key, n.value, r, n.right)};
  }

  VersionId merge(VersionId a, VersionId b) {
    if (a == kEmptyVersion) return b;
    if (b == kEmptyVersion) return a;
    Node na = arena_[static_cast<std::size_t>(a)];
    Node nb = arena_[static_cast<std::size_t>(b)];
    if (na.prio > nb.prio) return make(na.key, na.value, na.left, merge(na.right, b));
    return make(nb.key, nb.value, merge(a, nb.left), nb.right);
  }

  std::vector<Node> arena_;
};

}  // namespace eertree
