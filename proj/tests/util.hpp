#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eertree/types.hpp"

namespace testutil {

inline std::string random_string(std::mt19937_64& rng, std::size_t max_len,
                                 std::uint32_t sigma, char base = 'a') {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::uint32_t> sym_dist(0, sigma - 1);
  std::string s(len_dist(rng), base);
  for (char& c : s) c = static_cast<char>(base + sym_dist(rng));
  return s;
}

inline std::vector<eertree::Symbol> to_word(const std::string& s) {
  std::vector<eertree::Symbol> w;
  w.reserve(s.size());
  for (unsigned char b : s) w.push_back(b);
  return w;
}

inline std::string to_bytes(const std::vector<eertree::Symbol>& w) {
  std::string s;
  for (eertree::Symbol c : w) s.push_back(static_cast<char>(c));
  return s;
}

}  // namespace testutil
