#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "eertree/eertree.hpp"

namespace eertree {

inline constexpr std::int64_t kNoParityFactorization = -1;

// Streaming palindromic-length engine. After each push, ans(i) is the
// minimal number of palindromes concatenating to the length-i prefix, and
// ans_odd/ans_even are the parity-constrained minima. O(log n) series are
// visited per push; each series costs O(1) through per-node dp cells whose
// stale values are exactly the minima needed one period later.
class PalFactorizer {
 public:
  explicit PalFactorizer(std::uint32_t sigma = 256, std::size_t reserve = 0);

  void push(Symbol c);

  std::size_t length() const { return tree_.text().size(); }
  const std::vector<std::int64_t>& ans_all() const { return ans_; }
  std::int64_t ans(std::size_t i) const { return ans_[i]; }
  std::int64_t ans_odd(std::size_t i) const;   // kNoParityFactorization if none
  std::int64_t ans_even(std::size_t i) const;

  // Position j < i such that s[j..i-1] is a palindrome and the odd (even)
  // minimum at i continues an even (odd) one at j. kNoNode-like -1 if none.
  std::int64_t pred_odd(std::size_t i) const { return pred_o_[i]; }
  std::int64_t pred_even(std::size_t i) const { return pred_e_[i]; }

  // Same recurrence evaluated by the plain suffix-link loop over the whole
  // chain of the current maxSuf; O(chain length), for cross-checking.
  std::int64_t ans_last_naive() const;

  std::uint64_t series_visited() const { return series_visited_; }
  std::uint64_t last_push_series() const { return last_push_series_; }
  const Eertree& tree() const { return tree_; }

 private:
  Eertree tree_;
  std::vector<std::int64_t> ans_, ans_o_, ans_e_;   // per prefix length
  std::vector<std::int64_t> pred_o_, pred_e_;       // argmin positions
  std::vector<std::int64_t> dp_o_, dp_e_;           // per node
  std::vector<std::int64_t> dp_arg_o_, dp_arg_e_;   // per node
  std::uint64_t series_visited_ = 0;
  std::uint64_t last_push_series_ = 0;
};

// ans array (index 0 = empty prefix) for a whole string.
std::vector<std::int64_t> pal_lengths(const std::vector<Symbol>& s,
                                      std::uint32_t sigma = 256);
std::vector<std::int64_t> pal_lengths(std::string_view bytes);
std::int64_t pal_length(std::string_view bytes);

struct ParityAns {
  std::vector<std::int64_t> odd, even;  // kNoParityFactorization where none
};
ParityAns min_parity_lengths(const std::vector<Symbol>& s, std::uint32_t sigma = 256);
ParityAns min_parity_lengths(std::string_view bytes);

// Factorization of s into exactly k palindromes, or nullopt. A minimal
// factorization of k's parity is expanded part by part until it has k parts.
std::optional<std::vector<std::vector<Symbol>>> k_factorization(
    const std::vector<Symbol>& s, std::int64_t k, std::uint32_t sigma = 256);
std::optional<std::vector<std::string>> k_factorization(std::string_view bytes,
                                                        std::int64_t k);

}  // namespace eertree
