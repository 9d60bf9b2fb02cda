#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eertree/eertree.hpp"

namespace eertree {

// Joint palindromic tree over up to k strings. Each node carries a k-bit
// membership mask: bit i set iff the node's palindrome occurs in string i.
// Queries require all k strings to be ingested (finalize() runs implicitly).
class JointEertree {
 public:
  JointEertree(std::size_t k, Options opt);

  void add_string(const std::vector<Symbol>& s);
  void add_string(std::string_view bytes);

  std::size_t strings_ingested() const { return ingested_; }
  const Eertree& tree() const { return tree_; }

  bool in_string(NodeId v, std::size_t i) const;

  // Palindromes occurring in every string.
  std::int64_t common_count();
  std::optional<std::vector<Symbol>> longest_common();

  // #{palindromes v : occ_{S_a}(v) > occ_{S_b}(v)}.
  std::int64_t occ_dominance(std::size_t a, std::size_t b);

  // #{(i,j,l) : S_a[i..i+l] = S_b[j..j+l], a palindrome} = sum of
  // occ_a(v) * occ_b(v) over nodes.
  std::int64_t equal_palindrome_triples(std::size_t a, std::size_t b);

  // Total occurrences of each palindrome node within string i alone.
  std::vector<std::int64_t> occ_in_string(std::size_t i);

 private:
  void finalize();
  std::uint64_t word_count() const { return (k_ + 63) / 64; }
  bool bit(NodeId v, std::size_t i) const;
  void set_bit(NodeId v, std::size_t i);

  Eertree tree_;
  std::size_t k_;
  std::size_t ingested_ = 0;
  bool finalized_ = false;
  std::vector<std::uint64_t> flags_;  // size() * word_count() packed words
  // occ_as_max snapshots taken at each string boundary; entry i holds the
  // per-node counters after ingesting strings 0..i-1.
  std::vector<std::vector<std::int64_t>> snapshots_;
};

}  // namespace eertree
