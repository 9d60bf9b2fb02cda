#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eertree/types.hpp"

namespace eertree {

// Ordered symbol -> node dictionary of an eertree node. Two layouts:
// a direct sigma-sized slot array for tiny alphabets, or a sorted vector
// (an ordered associative map with O(log sigma) lookup) otherwise.
class EdgeMap {
 public:
  EdgeMap() = default;
  explicit EdgeMap(std::uint32_t dense_sigma) : dense_sigma_(dense_sigma) {}

  NodeId get(Symbol c) const {
    if (dense_sigma_ != 0) {
      if (slots_.empty()) return kNoNode;
      return slots_[c];
    }
    auto it = lower_bound(c);
    return (it != items_.end() && it->first == c) ? it->second : kNoNode;
  }

  void set(Symbol c, NodeId v) {
    if (dense_sigma_ != 0) {
      if (slots_.empty()) slots_.assign(dense_sigma_, kNoNode);
      slots_[c] = v;
      return;
    }
    auto it = lower_bound(c);
    if (it != items_.end() && it->first == c)
      it->second = v;
    else
      items_.insert(it, {c, v});
  }

  void erase(Symbol c) {
    if (dense_sigma_ != 0) {
      if (!slots_.empty()) slots_[c] = kNoNode;
      return;
    }
    auto it = lower_bound(c);
    if (it != items_.end() && it->first == c) items_.erase(it);
  }

  std::size_t size() const {
    if (dense_sigma_ != 0) {
      std::size_t n = 0;
      for (NodeId v : slots_)
        if (v != kNoNode) ++n;
      return n;
    }
    return items_.size();
  }

  // Ascending symbol order.
  template <class F>
  void for_each(F&& f) const {
    if (dense_sigma_ != 0) {
      for (Symbol c = 0; c < slots_.size(); ++c)
        if (slots_[c] != kNoNode) f(c, slots_[c]);
      return;
    }
    for (const auto& [c, v] : items_) f(c, v);
  }

 private:
  std::vector<std::pair<Symbol, NodeId>>::const_iterator lower_bound(Symbol c) const {
    auto lo = items_.begin(), hi = items_.end();
    while (lo != hi) {
      auto mid = lo + (hi - lo) / 2;
      if (mid->first < c)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  }
  std::vector<std::pair<Symbol, NodeId>>::iterator lower_bound(Symbol c) {
    auto it = std::as_const(*this).lower_bound(c);
    return items_.begin() + (it - items_.cbegin());
  }

  std::uint32_t dense_sigma_ = 0;  // 0 = sparse layout
  std::vector<NodeId> slots_;
  std::vector<std::pair<Symbol, NodeId>> items_;
};

}  // namespace eertree
