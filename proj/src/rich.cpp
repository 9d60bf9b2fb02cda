#include "eertree/rich.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "eertree/eertree.hpp"

namespace eertree {

namespace {

Eertree make_tree(std::uint32_t sigma, std::uint32_t n, std::size_t max_nodes) {
  Options opt;
  opt.sigma = sigma;
  opt.mode = Mode::Direct;
  opt.reserve = n;
  opt.max_nodes = max_nodes;
  return Eertree(opt);
}

// Depth-first over rich extensions of the tree's current (rich) content.
// visit(cur) is called for every rich string strictly deeper than the seed;
// a false return aborts. The tree is restored to its seed state on return.
template <typename Visit>
bool traverse(Eertree& t, std::vector<Symbol>& cur, std::uint32_t sigma, std::uint32_t n,
              std::uint64_t& adds, Visit&& visit) {
  const std::size_t seed_depth = cur.size();
  std::vector<Symbol> frames{0};  // next symbol to probe per depth
  bool keep_going = true;
  while (!frames.empty()) {
    Symbol& next = frames.back();
    if (next >= sigma || !keep_going) {
      frames.pop_back();
      if (cur.size() > seed_depth) {
        t.pop();
        cur.pop_back();
      }
      continue;
    }
    const Symbol c = next++;
    ++adds;
    if (t.add(c) == 1) {
      cur.push_back(c);
      keep_going = visit(static_cast<const std::vector<Symbol>&>(cur));
      if (keep_going && cur.size() < n) {
        frames.push_back(0);
      } else {
        t.pop();
        cur.pop_back();
      }
    } else {
      // Extension repeats its longest suffix-palindrome: not rich.
      t.pop();
    }
  }
  return keep_going;
}

struct SubtreeResult {
  std::vector<std::uint64_t> counts;
  std::uint64_t adds = 0;
};

SubtreeResult count_subtree(const std::vector<Symbol>& prefix, std::uint32_t sigma,
                            std::uint32_t n, std::size_t max_nodes) {
  SubtreeResult r;
  r.counts.assign(n, 0);
  Eertree t = make_tree(sigma, n, max_nodes);
  for (Symbol c : prefix)
    if (t.add(c) != 1) throw std::logic_error("subtree seed is not rich");
  std::vector<Symbol> cur = prefix;
  traverse(t, cur, sigma, n, r.adds, [&](const std::vector<Symbol>& s) {
    ++r.counts[s.size() - 1];
    return true;
  });
  return r;
}

}  // namespace

RichCensus count_rich(std::uint32_t sigma, std::uint32_t n, RichOptions opt) {
  if (sigma < 1 || n < 1) throw std::invalid_argument("sigma and n must be positive");
  RichCensus census;
  census.sigma = sigma;
  census.max_len = n;
  census.counts.assign(n, 0);

  std::vector<Symbol> seed;
  std::uint64_t scale = 1;
  if (opt.fix_first_symbol) {
    seed.push_back(0);
    scale = sigma;
    census.counts[0] = 1;  // the pinned first symbol itself
  }

  const std::uint32_t d = opt.partition_depth;
  if (d == 0 || d >= n || d <= seed.size()) {
    Eertree t = make_tree(sigma, n, opt.max_nodes);
    for (Symbol c : seed) {
      ++census.add_calls;
      t.add(c);
    }
    std::vector<Symbol> cur = seed;
    if (cur.size() < n)
      traverse(t, cur, sigma, n, census.add_calls, [&](const std::vector<Symbol>& s) {
        ++census.counts[s.size() - 1];
        return true;
      });
  } else {
    // Collect the depth-d layer sequentially (counting everything above it),
    // then farm the subtrees out to a thread pool.
    std::vector<std::vector<Symbol>> layer;
    Eertree t = make_tree(sigma, n, opt.max_nodes);
    for (Symbol c : seed) {
      ++census.add_calls;
      t.add(c);
    }
    std::vector<Symbol> cur = seed;
    traverse(t, cur, sigma, d, census.add_calls, [&](const std::vector<Symbol>& s) {
      ++census.counts[s.size() - 1];
      if (s.size() == d) layer.push_back(s);
      return true;
    });

    std::vector<SubtreeResult> results(layer.size());
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::min<std::size_t>(layer.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < layer.size(); i = next.fetch_add(1))
          results[i] = count_subtree(layer[i], sigma, n, opt.max_nodes);
      });
    for (auto& th : pool) th.join();
    for (const auto& r : results) {
      census.add_calls += r.adds;
      for (std::size_t i = 0; i < n; ++i) census.counts[i] += r.counts[i];
    }
  }

  if (scale != 1)
    for (auto& c : census.counts) c *= scale;
  return census;
}

void enumerate_rich(std::uint32_t sigma, std::uint32_t n,
                    const std::function<bool(const std::vector<Symbol>&)>& visitor,
                    std::size_t max_nodes) {
  if (sigma < 1 || n < 1) throw std::invalid_argument("sigma and n must be positive");
  Eertree t = make_tree(sigma, n, max_nodes);
  std::vector<Symbol> cur;
  std::uint64_t adds = 0;
  traverse(t, cur, sigma, n, adds, visitor);
}

}  // namespace eertree
