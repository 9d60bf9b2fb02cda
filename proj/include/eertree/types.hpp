#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eertree {

/// Dense symbol id, 0 <= value < sigma. Input bytes/code points are mapped
/// to Symbols by the caller (the CLI keeps an alphabet table).
using Symbol = std::uint32_t;

/// Handle into the node arena. The two roots occupy fixed slots.
using NodeId = std::int32_t;

inline constexpr NodeId kRootNeg = 0;   // imaginary root, length -1
inline constexpr NodeId kRootZero = 1;  // empty-string root, length 0
inline constexpr NodeId kNoNode = -1;

/// How add() searches for the longest suffix-palindrome.
/// Series is an internal strategy used by the factorization engine; it walks
/// series links instead of quick links and needs no extra per-node storage
/// beyond what factorization requires anyway.
enum class Mode { Basic, Quick, Direct, Series };

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instrumentation counters, exposed read-only. Tests and benchmarks use
/// them to pin the per-call work bounds.
struct Stats {
  std::uint64_t add_calls = 0;
  std::uint64_t pop_calls = 0;
  std::uint64_t link_steps = 0;        // suffix-link transitions, maxSuf walk
  std::uint64_t link_steps_secondary = 0;  // same, suffix-link-creation walk
  std::uint64_t quick_jumps = 0;       // quick-link jumps (Quick walks)
  std::uint64_t series_steps = 0;      // series-link jumps (Series walks)
  std::uint64_t map_allocations = 0;   // persistent-map nodes allocated
  std::uint64_t last_call_transitions = 0;  // steps+jumps of the latest add
};

}  // namespace eertree
