#include "eertree/analytics.hpp"

#include <algorithm>

namespace eertree {

std::vector<std::int64_t> compute_occ(const Eertree& t) {
  const NodeId n = static_cast<NodeId>(t.size());
  std::vector<std::int64_t> occ(static_cast<std::size_t>(n), 0);
  for (NodeId v = 2; v < n; ++v) occ[static_cast<std::size_t>(v)] = t.occ_as_max(v);
  // Creation order refines length order among proper suffixes, so a single
  // descending pass pushes each count into its suffix link.
  for (NodeId v = n - 1; v >= 2; --v)
    occ[static_cast<std::size_t>(t.node_link(v))] += occ[static_cast<std::size_t>(v)];
  return occ;
}

Refrain refrain(const Eertree& t) {
  const auto occ = compute_occ(t);
  Refrain best;
  for (NodeId v = 2; v < static_cast<NodeId>(t.size()); ++v) {
    const std::int64_t value = t.node_len(v) * occ[static_cast<std::size_t>(v)];
    if (value > best.value) best = {v, value, occ[static_cast<std::size_t>(v)]};
  }
  return best;
}

std::vector<std::int64_t> palindromes_ending_at(const std::vector<Symbol>& s,
                                                std::uint32_t sigma) {
  Options opt;
  opt.sigma = sigma;
  opt.mode = Mode::Quick;
  opt.reserve = s.size();
  Eertree t(std::move(opt));
  std::vector<std::int64_t> out;
  out.reserve(s.size());
  for (Symbol c : s) {
    t.add(c);
    out.push_back(t.suf_count(t.max_suf()));
  }
  return out;
}

std::int64_t palindromic_pairs(const std::vector<Symbol>& s, std::uint32_t sigma) {
  if (s.size() < 2) return 0;
  Options opt;
  opt.sigma = sigma;
  opt.mode = Mode::Quick;
  opt.reserve = 2 * s.size();
  Eertree t(std::move(opt));
  std::vector<std::int64_t> ending;
  ending.reserve(s.size());
  for (Symbol c : s) {
    t.add(c);
    ending.push_back(t.suf_count(t.max_suf()));
  }
  // A string and its reversal share their palindrome set, so the reversed
  // pass runs through the same arena and creates no nodes; it only reads off
  // maxSuf per position, which for the reversal counts palindromes *starting*
  // at the mirrored position of s.
  t.start_new_string();
  std::vector<std::int64_t> rev_ending;
  rev_ending.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    t.add(*it);
    rev_ending.push_back(t.suf_count(t.max_suf()));
  }
  std::int64_t total = 0;
  const std::size_t n = s.size();
  for (std::size_t j = 0; j + 1 < n; ++j) total += ending[j] * rev_ending[n - 2 - j];
  return total;
}

std::int64_t palindromic_pairs(std::string_view bytes) {
  std::vector<Symbol> s;
  s.reserve(bytes.size());
  for (unsigned char b : bytes) s.push_back(b);
  return palindromic_pairs(s, 256);
}

}  // namespace eertree
