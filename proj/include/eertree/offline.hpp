#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "eertree/eertree.hpp"

namespace eertree {

// Offline eertree construction for integer alphabets: palindrome radii, a
// two-pointer scan producing the longest and second-longest suffix-palindrome
// per prefix, SA/LCP, and a stack walk assembling the odd and even right-half
// tries. Suffix links fall out of the per-position rank arrays.

struct RadiusArrays {
  // odd[i]: radius (half-length, counting the center) of the longest
  // odd-length palindrome centered at position i. even[i]: radius of the
  // longest even-length palindrome centered between i and i+1.
  std::vector<std::int32_t> odd, even;
};

RadiusArrays manacher(const std::vector<Symbol>& s);

struct SuffixPalEntry {
  std::int32_t rank;  // 1 = longest, 2 = second longest
  std::int32_t r;     // 1-based end position of the prefix
};

struct CenterBuckets {
  // Buckets keyed by the 1-based start of the palindrome's right half (for
  // an even palindrome this is the position just right of the center; the
  // key doubles as "which suffix in SA order resolves this entry"). Ranks
  // whose palindrome is empty land at key r+1 with radius 0.
  std::vector<std::vector<SuffixPalEntry>> odd, even;  // size n + 2
  std::size_t total_entries = 0;                       // exactly 2n
  // Per prefix r (1-based): start of the longest / second-longest
  // suffix-palindrome; second_start == r+1 encodes "none".
  std::vector<std::int32_t> longest_start, second_start;
};

CenterBuckets suffix_pal_scan(const std::vector<Symbol>& s, const RadiusArrays& radii);

struct SaLcp {
  std::vector<std::int32_t> sa;   // 0-based suffix starts, lexicographic
  std::vector<std::int32_t> lcp;  // lcp[i] = lcp(sa[i], sa[i-1]); lcp[0] = 0
};

SaLcp build_sa_lcp(const std::vector<Symbol>& s);

struct OfflineStats {
  std::size_t bucket_entries = 0;  // == 2n
  std::size_t stack_pushes = 0;    // == palindrome node count
};

// Structurally identical to the online construction (nodes, edges, suffix
// links, maxSuf); occurrence counters and quick links are not populated.
Eertree build_offline(const std::vector<Symbol>& s, std::uint32_t sigma = 256,
                      OfflineStats* stats = nullptr);
Eertree build_offline(std::string_view bytes, OfflineStats* stats = nullptr);

}  // namespace eertree
