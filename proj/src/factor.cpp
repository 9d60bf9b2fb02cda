#include "eertree/factor.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace eertree {

namespace {

// Internal infinity; safely survives the +1 in the recurrence.
constexpr std::int64_t kInf = std::int64_t{1} << 60;

}  // namespace

PalFactorizer::PalFactorizer(std::uint32_t sigma, std::size_t reserve)
    : tree_([&] {
        Options opt;
        opt.sigma = sigma;
        opt.mode = Mode::Series;
        opt.reserve = reserve;
        return opt;
      }()) {
  ans_.push_back(0);
  ans_o_.push_back(kInf);
  ans_e_.push_back(0);
  pred_o_.push_back(-1);
  pred_e_.push_back(-1);
}

std::int64_t PalFactorizer::ans_odd(std::size_t i) const {
  return ans_o_[i] >= kInf ? kNoParityFactorization : ans_o_[i];
}

std::int64_t PalFactorizer::ans_even(std::size_t i) const {
  return ans_e_[i] >= kInf ? kNoParityFactorization : ans_e_[i];
}

void PalFactorizer::push(Symbol c) {
  tree_.add(c);
  const auto i = static_cast<std::int64_t>(tree_.text().size());
  dp_o_.resize(tree_.size(), kInf);
  dp_e_.resize(tree_.size(), kInf);
  dp_arg_o_.resize(tree_.size(), -1);
  dp_arg_e_.resize(tree_.size(), -1);
  ans_o_.push_back(kInf);
  ans_e_.push_back(kInf);
  pred_o_.push_back(-1);
  pred_e_.push_back(-1);

  last_push_series_ = 0;
  for (NodeId v = tree_.max_suf(); tree_.node_len(v) > 0; v = tree_.node_series_link(v)) {
    ++last_push_series_;
    const auto u = static_cast<std::size_t>(v);
    // Position preceding the shortest palindrome of v's series.
    const std::size_t base = static_cast<std::size_t>(
        i - (tree_.node_len(tree_.node_series_link(v)) + tree_.node_diff(v)));
    dp_o_[u] = ans_o_[base];
    dp_e_[u] = ans_e_[base];
    dp_arg_o_[u] = dp_arg_e_[u] = static_cast<std::int64_t>(base);
    const NodeId lv = tree_.node_link(v);
    if (tree_.node_diff(lv) == tree_.node_diff(v)) {
      // link[v] lies in the same series; its dp cell, written one period
      // earlier, holds the minimum over the remaining series members.
      const auto lu = static_cast<std::size_t>(lv);
      if (dp_o_[lu] < dp_o_[u]) {
        dp_o_[u] = dp_o_[lu];
        dp_arg_o_[u] = dp_arg_o_[lu];
      }
      if (dp_e_[lu] < dp_e_[u]) {
        dp_e_[u] = dp_e_[lu];
        dp_arg_e_[u] = dp_arg_e_[lu];
      }
    }
    // Appending one more palindrome flips the parity.
    if (dp_e_[u] + 1 < ans_o_[static_cast<std::size_t>(i)]) {
      ans_o_[static_cast<std::size_t>(i)] = dp_e_[u] + 1;
      pred_o_[static_cast<std::size_t>(i)] = dp_arg_e_[u];
    }
    if (dp_o_[u] + 1 < ans_e_[static_cast<std::size_t>(i)]) {
      ans_e_[static_cast<std::size_t>(i)] = dp_o_[u] + 1;
      pred_e_[static_cast<std::size_t>(i)] = dp_arg_o_[u];
    }
  }
  series_visited_ += last_push_series_;

  ans_.push_back(std::min(ans_o_[static_cast<std::size_t>(i)],
                          ans_e_[static_cast<std::size_t>(i)]));
  assert(ans_[static_cast<std::size_t>(i)] < kInf);
  assert(std::abs(ans_[static_cast<std::size_t>(i)] -
                  ans_[static_cast<std::size_t>(i) - 1]) <= 1);
}

std::int64_t PalFactorizer::ans_last_naive() const {
  const std::size_t n = tree_.text().size();
  if (n == 0) return 0;
  std::int64_t best = kInf;
  for (NodeId v = tree_.max_suf(); tree_.node_len(v) > 0; v = tree_.node_link(v))
    best = std::min(best, ans_[n - static_cast<std::size_t>(tree_.node_len(v))] + 1);
  return best;
}

std::vector<std::int64_t> pal_lengths(const std::vector<Symbol>& s, std::uint32_t sigma) {
  PalFactorizer f(sigma, s.size());
  for (Symbol c : s) f.push(c);
  return f.ans_all();
}

namespace {

std::vector<Symbol> to_word(std::string_view bytes) {
  std::vector<Symbol> s;
  s.reserve(bytes.size());
  for (unsigned char b : bytes) s.push_back(b);
  return s;
}

}  // namespace

std::vector<std::int64_t> pal_lengths(std::string_view bytes) {
  return pal_lengths(to_word(bytes), 256);
}

std::int64_t pal_length(std::string_view bytes) { return pal_lengths(bytes).back(); }

ParityAns min_parity_lengths(const std::vector<Symbol>& s, std::uint32_t sigma) {
  PalFactorizer f(sigma, s.size());
  for (Symbol c : s) f.push(c);
  ParityAns out;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    out.odd.push_back(f.ans_odd(i));
    out.even.push_back(f.ans_even(i));
  }
  return out;
}

ParityAns min_parity_lengths(std::string_view bytes) {
  return min_parity_lengths(to_word(bytes), 256);
}

std::optional<std::vector<std::vector<Symbol>>> k_factorization(
    const std::vector<Symbol>& s, std::int64_t k, std::uint32_t sigma) {
  const auto n = static_cast<std::int64_t>(s.size());
  if (k < 1 || k > n) return std::nullopt;
  PalFactorizer f(sigma, s.size());
  for (Symbol c : s) f.push(c);
  const bool odd = k % 2 == 1;
  const std::int64_t m = odd ? f.ans_odd(s.size()) : f.ans_even(s.size());
  if (m == kNoParityFactorization || m > k) return std::nullopt;

  // Minimal factorization of k's parity, reconstructed through the stored
  // argmin positions (each remains a palindrome boundary for later prefixes
  // because its series member keeps growing in lockstep with the text).
  std::vector<std::vector<Symbol>> parts;
  std::size_t i = s.size();
  bool cur = odd;
  while (i > 0) {
    const std::int64_t j = cur ? f.pred_odd(i) : f.pred_even(i);
    assert(j >= 0 && static_cast<std::size_t>(j) < i);
    parts.emplace_back(s.begin() + j, s.begin() + static_cast<std::ptrdiff_t>(i));
    i = static_cast<std::size_t>(j);
    cur = !cur;
  }
  std::reverse(parts.begin(), parts.end());
  assert(static_cast<std::int64_t>(parts.size()) == m);

  // Grow by two parts at a time: peel the ends off a part of length >= 3,
  // or break two length-2 parts into singles.
  while (static_cast<std::int64_t>(parts.size()) < k) {
    auto big = std::find_if(parts.begin(), parts.end(),
                            [](const auto& p) { return p.size() >= 3; });
    if (big != parts.end()) {
      std::vector<Symbol> first{big->front()}, last{big->back()};
      std::vector<Symbol> mid(big->begin() + 1, big->end() - 1);
      const auto idx = big - parts.begin();
      parts[static_cast<std::size_t>(idx)] = std::move(mid);
      parts.insert(parts.begin() + idx, std::move(first));
      parts.insert(parts.begin() + idx + 2, std::move(last));
    } else {
      std::size_t split = 0;
      for (std::size_t t = 0; t < parts.size() && split < 2;) {
        if (parts[t].size() == 2) {
          std::vector<Symbol> a{parts[t][0]}, b{parts[t][1]};
          parts[t] = std::move(a);
          parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(t) + 1, std::move(b));
          ++split;
          t += 2;
        } else {
          ++t;
        }
      }
      assert(split == 2);
    }
  }
  return parts;
}

std::optional<std::vector<std::string>> k_factorization(std::string_view bytes,
                                                        std::int64_t k) {
  auto parts = k_factorization(to_word(bytes), k, 256);
  if (!parts) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& p : *parts) {
    std::string part;
    for (Symbol c : p) part.push_back(static_cast<char>(c));
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace eertree
