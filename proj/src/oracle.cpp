#include "eertree/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace eertree::oracle {

namespace {

void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) throw std::length_error(std::string("oracle size guard: ") + what);
}

// pal[i][j] == s[i..j] is a palindrome (0-based, inclusive).
std::vector<std::vector<char>> pal_table(const Word& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<char>> pal(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) pal[i][i] = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) pal[i][i + 1] = s[i] == s[i + 1];
  for (std::size_t len = 3; len <= n; ++len)
    for (std::size_t i = 0; i + len <= n; ++i)
      pal[i][i + len - 1] = s[i] == s[i + len - 1] && pal[i + 1][i + len - 2];
  return pal;
}

}  // namespace

Word to_word(const std::string& bytes) {
  Word w;
  w.reserve(bytes.size());
  for (unsigned char b : bytes) w.push_back(static_cast<Symbol>(b));
  return w;
}

bool is_palindrome(const Word& s, const std::vector<Symbol>& theta) {
  if (s.empty()) return false;
  for (std::size_t i = 0, j = s.size() - 1; i < j; ++i, --j) {
    Symbol mirrored = theta.empty() ? s[j] : theta[s[j]];
    if (s[i] != mirrored) return false;
  }
  // Odd length: the center must be its own theta image.
  if (!theta.empty() && s.size() % 2 == 1) {
    Symbol mid = s[s.size() / 2];
    if (theta[mid] != mid) return false;
  }
  return true;
}

std::set<Word> pal_set(const Word& s, const std::vector<Symbol>& theta) {
  guard(s.size(), kQuadraticGuard, "pal_set");
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  auto mirror = [&](Symbol c) { return theta.empty() ? c : theta[c]; };
  std::set<Word> out;
  // Center expansion; a center contributes all its nested palindromes.
  auto expand = [&](std::ptrdiff_t l, std::ptrdiff_t r) {
    while (l >= 0 && r < n && s[static_cast<std::size_t>(l)] == mirror(s[static_cast<std::size_t>(r)])) {
      out.insert(Word(s.begin() + l, s.begin() + r + 1));
      --l;
      ++r;
    }
  };
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    expand(i, i);
    expand(i, i + 1);
  }
  return out;
}

std::int64_t occurrences(const Word& s, const Word& pattern) {
  if (pattern.empty() || pattern.size() > s.size()) return 0;
  std::int64_t count = 0;
  for (std::size_t i = 0; i + pattern.size() <= s.size(); ++i)
    if (std::equal(pattern.begin(), pattern.end(), s.begin() + static_cast<std::ptrdiff_t>(i)))
      ++count;
  return count;
}

std::map<Word, std::int64_t> occ_table(const Word& s) {
  guard(s.size(), kQuadraticGuard, "occ_table");
  std::map<Word, std::int64_t> out;
  auto pal = pal_table(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      if (pal[i][j])
        ++out[Word(s.begin() + static_cast<std::ptrdiff_t>(i),
                   s.begin() + static_cast<std::ptrdiff_t>(j) + 1)];
  return out;
}

std::int64_t refrain_value(const Word& s) {
  std::int64_t best = 0;
  for (const auto& [p, occ] : occ_table(s))
    best = std::max(best, static_cast<std::int64_t>(p.size()) * occ);
  return best;
}

std::int64_t palindromic_pairs(const Word& s) {
  guard(s.size(), kQuadraticGuard, "palindromic_pairs");
  const std::size_t n = s.size();
  if (n < 2) return 0;
  auto pal = pal_table(s);
  std::vector<std::int64_t> ending(n, 0), starting(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (pal[i][j]) {
        ++ending[j];
        ++starting[i];
      }
  std::int64_t total = 0;
  for (std::size_t j = 0; j + 1 < n; ++j) total += ending[j] * starting[j + 1];
  return total;
}

std::vector<std::int64_t> pal_lengths_per_prefix(const Word& s) {
  guard(s.size(), kQuadraticGuard, "pal_lengths_per_prefix");
  const std::size_t n = s.size();
  auto pal = pal_table(s);
  std::vector<std::int64_t> ans(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    std::int64_t best = static_cast<std::int64_t>(i);  // all singles
    for (std::size_t j = 0; j < i; ++j)
      if (pal[j][i - 1]) best = std::min(best, ans[j] + 1);
    ans[i] = best;
  }
  return ans;
}

std::int64_t pal_length(const Word& s) {
  if (s.empty()) return 0;
  return pal_lengths_per_prefix(s).back();
}

ParityLengths parity_lengths(const Word& s) {
  guard(s.size(), kQuadraticGuard, "parity_lengths");
  const std::size_t n = s.size();
  auto pal = pal_table(s);
  const std::int64_t inf = static_cast<std::int64_t>(n) + 1;
  ParityLengths out;
  out.odd.assign(n + 1, inf);
  out.even.assign(n + 1, inf);
  out.even[0] = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pal[j][i - 1]) {
        if (out.even[j] < inf) out.odd[i] = std::min(out.odd[i], out.even[j] + 1);
        if (out.odd[j] < inf) out.even[i] = std::min(out.even[i], out.odd[j] + 1);
      }
  for (std::size_t i = 0; i <= n; ++i) {
    if (out.odd[i] >= inf) out.odd[i] = kNoFactorization;
    if (out.even[i] >= inf) out.even[i] = kNoFactorization;
  }
  return out;
}

bool k_factorable(const Word& s, std::int64_t k) {
  if (k < 1 || k > static_cast<std::int64_t>(s.size())) return false;
  ParityLengths p = parity_lengths(s);
  std::int64_t m = (k % 2 == 1) ? p.odd.back() : p.even.back();
  return m != kNoFactorization && m <= k;
}

bool is_rich(const Word& s, const std::vector<Symbol>& theta) {
  return pal_set(s, theta).size() == s.size();
}

namespace {

// Longest suffix of s that is a palindrome, by direct definition checking.
Word longest_suffix_palindrome(const Word& s) {
  for (std::size_t len = s.size(); len >= 1; --len) {
    Word suf(s.end() - static_cast<std::ptrdiff_t>(len), s.end());
    if (is_palindrome(suf)) return suf;
  }
  return {};
}

}  // namespace

std::vector<std::uint64_t> rich_counts(std::uint32_t sigma, std::uint32_t n) {
  guard(n, 64, "rich_counts depth");
  std::vector<std::uint64_t> counts(n, 0);
  Word cur;
  // Prefix-pruned DFS over strings, keeping the set of distinct palindromes
  // of `cur`. A string of length m is rich iff the set has m elements, and
  // extending a rich string stays rich iff the extension's longest suffix
  // palindrome was not seen before.
  std::set<Word> pals;
  struct Frame {
    Symbol next;
    bool added;
    Word pal;  // palindrome contributed at this depth
  };
  std::vector<Frame> stack{{0, false, {}}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next >= sigma) {
      if (f.added) pals.erase(f.pal);
      stack.pop_back();
      if (!cur.empty()) cur.pop_back();
      continue;
    }
    Symbol c = f.next++;
    cur.push_back(c);
    Word pal = longest_suffix_palindrome(cur);
    if (!pals.contains(pal)) {
      ++counts[cur.size() - 1];
      if (cur.size() < n) {
        pals.insert(pal);
        stack.push_back({0, true, std::move(pal)});
        continue;
      }
    }
    cur.pop_back();
  }
  return counts;
}

}  // namespace eertree::oracle
