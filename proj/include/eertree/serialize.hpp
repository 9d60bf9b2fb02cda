#pragma once

#include <string>

#include "eertree/eertree.hpp"

namespace eertree {

// Exports use the paper-facing numbering: the two roots are -1 and 0 and
// palindrome nodes count from 1 in creation order.
//
// JSON schema:
//   {"sigma":int, "theta":[int]|null,
//    "nodes":[{"id":int,"len":int,"link":int,"edges":{"<symbol>":int}}],
//    "maxSuf":int, "text":string}
std::string export_json(const Eertree& t);

// DOT digraph: solid labeled edges for trie edges, dashed for suffix links.
std::string export_dot(const Eertree& t);

// Rebuilds a tree from export_json output. The result carries structure
// only (no occurrence counters); mode is Basic.
Eertree parse_json(const std::string& doc);

// Equality of the palindrome sets together with their edge labels, suffix
// links, maxSuf and text. Keyed by palindrome strings, so trees built in
// different node orders (offline vs online) compare equal.
bool structurally_equal(const Eertree& a, const Eertree& b);

}  // namespace eertree
