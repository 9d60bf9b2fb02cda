#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "eertree/types.hpp"

namespace eertree {

// A string is rich when its distinct nonempty subpalindromes are as many as
// its letters. Richness is closed under prefixes, so the rich strings over a
// fixed alphabet form a trie; these routines walk it depth-first with a
// single add/pop eertree, one add() per trie edge probe.

struct RichCensus {
  std::uint32_t sigma = 0;
  std::uint32_t max_len = 0;
  std::vector<std::uint64_t> counts;  // counts[i-1] = rich strings of length i
  std::uint64_t add_calls = 0;        // total eertree add() probes spent
};

struct RichOptions {
  // Count with the first symbol pinned and scale by sigma (symbols are
  // interchangeable). Counting only; roughly divides the work by sigma.
  bool fix_first_symbol = false;
  // > 0: split the trie into independent subtree tasks at this depth and
  // count them on a thread pool. Deterministic; adds replay overhead of
  // depth symbols per task.
  std::uint32_t partition_depth = 0;
  std::size_t max_nodes = 0;  // per-tree node budget, 0 = unlimited
};

RichCensus count_rich(std::uint32_t sigma, std::uint32_t n, RichOptions opt = {});

// Calls visitor on every rich string of length <= n in lexicographic
// depth-first order; a false return aborts the traversal.
void enumerate_rich(std::uint32_t sigma, std::uint32_t n,
                    const std::function<bool(const std::vector<Symbol>&)>& visitor,
                    std::size_t max_nodes = 0);

}  // namespace eertree
