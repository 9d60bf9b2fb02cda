#include "eertree/offline.hpp"

#include <algorithm>
#include <numeric>

namespace eertree {

RadiusArrays manacher(const std::vector<Symbol>& s) {
  const auto n = static_cast<std::int32_t>(s.size());
  RadiusArrays ra;
  ra.odd.assign(static_cast<std::size_t>(n), 0);
  ra.even.assign(static_cast<std::size_t>(n), 0);
  for (std::int32_t i = 0, l = 0, r = -1; i < n; ++i) {
    std::int32_t k = i > r ? 1 : std::min(ra.odd[static_cast<std::size_t>(l + r - i)], r - i + 1);
    while (i - k >= 0 && i + k < n && s[static_cast<std::size_t>(i - k)] == s[static_cast<std::size_t>(i + k)]) ++k;
    ra.odd[static_cast<std::size_t>(i)] = k;
    if (i + k - 1 > r) {
      l = i - k + 1;
      r = i + k - 1;
    }
  }
  // d2[i]: radius of the longest even palindrome centered just before i.
  std::vector<std::int32_t> d2(static_cast<std::size_t>(n), 0);
  for (std::int32_t i = 0, l = 0, r = -1; i < n; ++i) {
    std::int32_t k = i > r ? 0 : std::min(d2[static_cast<std::size_t>(l + r - i + 1)], r - i + 1);
    while (i - k - 1 >= 0 && i + k < n &&
           s[static_cast<std::size_t>(i - k - 1)] == s[static_cast<std::size_t>(i + k)])
      ++k;
    d2[static_cast<std::size_t>(i)] = k;
    if (i + k - 1 > r) {
      l = i - k;
      r = i + k - 1;
    }
  }
  for (std::int32_t i = 1; i < n; ++i) ra.even[static_cast<std::size_t>(i - 1)] = d2[static_cast<std::size_t>(i)];
  return ra;
}

namespace {

// 1-based palindrome test from the radius arrays; the empty range is a
// palindrome, out-of-bounds is not.
bool is_pal(const RadiusArrays& ra, std::int32_t l, std::int32_t r) {
  if (l > r) return true;
  if (l < 1) return false;
  if ((l + r) % 2 == 0) {
    const std::int32_t c = (l + r) / 2;
    return ra.odd[static_cast<std::size_t>(c - 1)] >= r - c + 1;
  }
  const std::int32_t m = (l + r - 1) / 2;  // center between m and m+1
  return ra.even[static_cast<std::size_t>(m - 1)] >= r - m;
}

}  // namespace

CenterBuckets suffix_pal_scan(const std::vector<Symbol>& s, const RadiusArrays& radii) {
  const auto n = static_cast<std::int32_t>(s.size());
  CenterBuckets cb;
  cb.odd.assign(static_cast<std::size_t>(n) + 2, {});
  cb.even.assign(static_cast<std::size_t>(n) + 2, {});
  cb.longest_start.assign(static_cast<std::size_t>(n) + 1, 0);
  cb.second_start.assign(static_cast<std::size_t>(n) + 1, 0);
  auto push = [&](std::int32_t rank, std::int32_t l, std::int32_t r) {
    // Key by the right-half start; l + r even means an integer center.
    if ((l + r) % 2 == 0)
      cb.odd[static_cast<std::size_t>((l + r) / 2)].push_back({rank, r});
    else
      cb.even[static_cast<std::size_t>((l + r + 1) / 2)].push_back({rank, r});
    ++cb.total_entries;
  };
  std::int32_t l = 2, lp = 2;
  for (std::int32_t r = 1; r <= n; ++r) {
    --l;
    while (!is_pal(radii, l, r)) ++l;
    lp = std::max(lp - 1, l + 1);
    while (lp <= r && !is_pal(radii, lp, r)) ++lp;
    push(1, l, r);
    push(2, lp, r);
    cb.longest_start[static_cast<std::size_t>(r)] = l;
    cb.second_start[static_cast<std::size_t>(r)] = lp;
  }
  return cb;
}

SaLcp build_sa_lcp(const std::vector<Symbol>& s) {
  const auto n = static_cast<std::int32_t>(s.size());
  SaLcp out;
  if (n == 0) return out;
  std::vector<std::int32_t> sa(static_cast<std::size_t>(n)), rnk(static_cast<std::size_t>(n)),
      tmp(static_cast<std::size_t>(n));
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) {
    return s[static_cast<std::size_t>(a)] < s[static_cast<std::size_t>(b)];
  });
  rnk[static_cast<std::size_t>(sa[0])] = 0;
  for (std::int32_t i = 1; i < n; ++i)
    rnk[static_cast<std::size_t>(sa[static_cast<std::size_t>(i)])] =
        rnk[static_cast<std::size_t>(sa[static_cast<std::size_t>(i - 1)])] +
        (s[static_cast<std::size_t>(sa[static_cast<std::size_t>(i)])] !=
         s[static_cast<std::size_t>(sa[static_cast<std::size_t>(i - 1)])]);
  // Rank doubling with two counting-sort passes per round.
  for (std::int32_t k = 1; k < n; k <<= 1) {
    auto second = [&](std::int32_t i) {
      return i + k < n ? rnk[static_cast<std::size_t>(i + k)] + 1 : 0;
    };
    std::vector<std::int32_t> buf(static_cast<std::size_t>(n)), order(static_cast<std::size_t>(n));
    {
      std::vector<std::int32_t> c(static_cast<std::size_t>(n) + 2, 0);
      for (std::int32_t i = 0; i < n; ++i) ++c[static_cast<std::size_t>(second(i))];
      for (std::size_t i = 1; i < c.size(); ++i) c[i] += c[i - 1];
      for (std::int32_t i = n - 1; i >= 0; --i)
        buf[static_cast<std::size_t>(--c[static_cast<std::size_t>(second(i))])] = i;
    }
    {
      std::vector<std::int32_t> c(static_cast<std::size_t>(n) + 1, 0);
      for (std::int32_t i = 0; i < n; ++i) ++c[static_cast<std::size_t>(rnk[static_cast<std::size_t>(i)])];
      for (std::size_t i = 1; i < c.size(); ++i) c[i] += c[i - 1];
      for (std::int32_t i = n - 1; i >= 0; --i) {
        const std::int32_t v = buf[static_cast<std::size_t>(i)];
        order[static_cast<std::size_t>(--c[static_cast<std::size_t>(rnk[static_cast<std::size_t>(v)])])] = v;
      }
    }
    sa = order;
    tmp[static_cast<std::size_t>(sa[0])] = 0;
    for (std::int32_t i = 1; i < n; ++i) {
      const std::int32_t a = sa[static_cast<std::size_t>(i)], b = sa[static_cast<std::size_t>(i - 1)];
      const bool diff = rnk[static_cast<std::size_t>(a)] != rnk[static_cast<std::size_t>(b)] ||
                        second(a) != second(b);
      tmp[static_cast<std::size_t>(a)] = tmp[static_cast<std::size_t>(b)] + diff;
    }
    rnk = tmp;
    if (rnk[static_cast<std::size_t>(sa[static_cast<std::size_t>(n - 1)])] == n - 1) break;
  }
  out.sa = sa;
  out.lcp.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::int32_t> inv(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(sa[static_cast<std::size_t>(i)])] = i;
  std::int32_t h = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    if (inv[static_cast<std::size_t>(i)] > 0) {
      const std::int32_t j = sa[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)] - 1)];
      while (i + h < n && j + h < n &&
             s[static_cast<std::size_t>(i + h)] == s[static_cast<std::size_t>(j + h)])
        ++h;
      out.lcp[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)])] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  return out;
}

Eertree build_offline(const std::vector<Symbol>& s, std::uint32_t sigma, OfflineStats* stats) {
  const auto n = static_cast<std::int32_t>(s.size());
  Options opt;
  opt.sigma = sigma;
  if (n == 0) {
    if (stats) *stats = {};
    return Eertree::from_structure(std::move(opt), {}, {}, kRootZero);
  }
  const RadiusArrays ra = manacher(s);
  CenterBuckets cb = suffix_pal_scan(s, ra);
  const SaLcp sl = build_sa_lcp(s);

  std::vector<Eertree::NodeSpec> specs;
  std::vector<NodeId> node1(static_cast<std::size_t>(n) + 1, kRootZero);
  std::vector<NodeId> node2(static_cast<std::size_t>(n) + 1, kRootZero);
  std::size_t pushes = 0;
  auto len_of = [&](NodeId v) {
    if (v == kRootNeg) return std::int32_t{-1};
    if (v == kRootZero) return std::int32_t{0};
    return specs[static_cast<std::size_t>(v) - 2].len;
  };

  // One pass per trie: the path stack holds the current branch of right
  // halves; LCP pops, radii pushes, buckets resolved against the stack.
  for (const bool odd_pass : {true, false}) {
    std::vector<NodeId> path{odd_pass ? kRootNeg : kRootZero};
    for (std::int32_t i = 0; i < n; ++i) {
      const std::int32_t k = sl.sa[static_cast<std::size_t>(i)] + 1;  // right-half start, 1-based
      const std::int32_t lcp = i == 0 ? 0 : sl.lcp[static_cast<std::size_t>(i)];
      while (static_cast<std::int32_t>(path.size()) > lcp + 1) path.pop_back();
      const std::int32_t max_r =
          odd_pass ? ra.odd[static_cast<std::size_t>(k - 1)]
                   : (k >= 2 ? ra.even[static_cast<std::size_t>(k - 2)] : 0);
      for (auto j = static_cast<std::int32_t>(path.size()); j <= max_r; ++j) {
        const NodeId parent = path.back();
        const NodeId id = static_cast<NodeId>(2 + specs.size());
        specs.push_back({len_of(parent) + 2, parent, s[static_cast<std::size_t>(k + j - 2)],
                         kRootZero});
        path.push_back(id);
        ++pushes;
      }
      const auto& bucket =
          odd_pass ? cb.odd[static_cast<std::size_t>(k)] : cb.even[static_cast<std::size_t>(k)];
      for (const SuffixPalEntry& e : bucket) {
        const std::int32_t j = e.r - k + 1;
        (e.rank == 1 ? node1 : node2)[static_cast<std::size_t>(e.r)] =
            path[static_cast<std::size_t>(j)];
      }
    }
  }

  // The second-longest suffix-palindrome at a position is by definition the
  // suffix link of the longest one there.
  for (std::int32_t r = 1; r <= n; ++r)
    if (node1[static_cast<std::size_t>(r)] >= 2)
      specs[static_cast<std::size_t>(node1[static_cast<std::size_t>(r)]) - 2].link =
          node2[static_cast<std::size_t>(r)];

  if (stats) {
    stats->bucket_entries = cb.total_entries;
    stats->stack_pushes = pushes;
  }
  return Eertree::from_structure(std::move(opt), s, specs, node1[static_cast<std::size_t>(n)]);
}

Eertree build_offline(std::string_view bytes, OfflineStats* stats) {
  std::vector<Symbol> s;
  s.reserve(bytes.size());
  for (unsigned char b : bytes) s.push_back(b);
  return build_offline(s, 256, stats);
}

}  // namespace eertree
