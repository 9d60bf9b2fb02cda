#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "eertree/eertree.hpp"

namespace eertree {

// Occurrence count per node, indexed by internal NodeId (root entries hold
// accumulator noise; read palindrome nodes only). Linear: a node's occurrences
// are its occurrences-as-maxSuf plus those of its suffix-link children.
std::vector<std::int64_t> compute_occ(const Eertree& t);

struct Refrain {
  NodeId node = kNoNode;            // earliest-created argmax
  std::int64_t value = 0;           // len * occ; 0 for palindrome-free text
  std::int64_t occ = 0;
};

Refrain refrain(const Eertree& t);

// Number of palindromes of s ending at each position (equivalently, by
// symmetry, starting at each position of the reversal): sufCount of the
// maxSuf node after every prefix.
std::vector<std::int64_t> palindromes_ending_at(const std::vector<Symbol>& s,
                                                std::uint32_t sigma);

// #{(i,j,k) : s[i..j] and s[j+1..k] both palindromes}. Two tree builds.
std::int64_t palindromic_pairs(const std::vector<Symbol>& s, std::uint32_t sigma);
std::int64_t palindromic_pairs(std::string_view bytes);

}  // namespace eertree
