#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eertree/types.hpp"

namespace eertree::oracle {

// Brute-force reference implementations. Deliberately simple, eertree-free
// and not shared with the main modules; every [size-guarded] routine throws
// std::length_error past its guard.

inline constexpr std::size_t kQuadraticGuard = 2000;
inline constexpr std::size_t kCubicGuard = 300;
inline constexpr std::int64_t kNoFactorization = -1;

using Word = std::vector<Symbol>;

Word to_word(const std::string& bytes);

bool is_palindrome(const Word& s, const std::vector<Symbol>& theta = {});

// All distinct nonempty (theta-)palindromic substrings.
std::set<Word> pal_set(const Word& s, const std::vector<Symbol>& theta = {});

std::int64_t occurrences(const Word& s, const Word& pattern);

// palindrome -> number of occurrences in s, for every distinct palindrome.
std::map<Word, std::int64_t> occ_table(const Word& s);

// max |P| * occ(s, P) over palindromic substrings P; 0 for the empty string.
std::int64_t refrain_value(const Word& s);

// #{(i,j,k) : s[i..j], s[j+1..k] both palindromes}.
std::int64_t palindromic_pairs(const Word& s);

// Minimal number of palindromes whose concatenation is s.
std::int64_t pal_length(const Word& s);

// Per-prefix palindromic lengths, index 0 = empty prefix.
std::vector<std::int64_t> pal_lengths_per_prefix(const Word& s);

// Minimal odd/even factorization sizes per prefix; kNoFactorization if none.
struct ParityLengths {
  std::vector<std::int64_t> odd, even;
};
ParityLengths parity_lengths(const Word& s);

bool k_factorable(const Word& s, std::int64_t k);

bool is_rich(const Word& s, const std::vector<Symbol>& theta = {});

// Number of k-ary rich strings per length 1..n, by prefix-pruned search.
std::vector<std::uint64_t> rich_counts(std::uint32_t sigma, std::uint32_t n);

}  // namespace eertree::oracle
