#include "eertree/serialize.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace eertree {

namespace {

using nlohmann::json;

// Paper-facing ids: roots -1 and 0, palindrome nodes from 1.
std::int64_t public_id(NodeId v) {
  if (v == kRootNeg) return -1;
  if (v == kRootZero) return 0;
  return v - 1;
}

NodeId internal_id(std::int64_t id) {
  if (id == -1) return kRootNeg;
  if (id == 0) return kRootZero;
  return static_cast<NodeId>(id + 1);
}

}  // namespace

std::string export_json(const Eertree& t) {
  json doc;
  doc["sigma"] = t.sigma();
  doc["theta"] = t.has_theta() ? json(t.theta()) : json(nullptr);
  json nodes = json::array();
  for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v) {
    json node;
    node["id"] = public_id(v);
    node["len"] = t.node_len(v);
    node["link"] = public_id(t.node_link(v));
    json edges = json::object();
    for (const auto& [c, u] : t.node_edges(v)) edges[std::to_string(c)] = public_id(u);
    node["edges"] = std::move(edges);
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  doc["maxSuf"] = public_id(t.max_suf());
  bool narrow = true;
  for (Symbol c : t.text()) narrow = narrow && c < 256;
  if (narrow) {
    std::string text;
    for (Symbol c : t.text()) text.push_back(static_cast<char>(c));
    doc["text"] = std::move(text);
  } else {
    doc["text"] = json(nullptr);
    doc["textSymbols"] = t.text();
  }
  return doc.dump();
}

std::string export_dot(const Eertree& t) {
  std::ostringstream out;
  out << "digraph eertree {\n";
  out << "  rankdir=TB;\n";
  for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v) {
    std::string label;
    if (v == kRootNeg)
      label = "-1";
    else if (v == kRootZero)
      label = "0";
    else {
      for (Symbol c : t.node_symbols(v))
        label += (c >= 32 && c < 127) ? std::string(1, static_cast<char>(c))
                                      : "<" + std::to_string(c) + ">";
    }
    out << "  n" << v << " [label=\"" << label << "\"];\n";
  }
  for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v) {
    for (const auto& [c, u] : t.node_edges(v)) {
      std::string lbl = (c >= 32 && c < 127) ? std::string(1, static_cast<char>(c))
                                             : std::to_string(c);
      out << "  n" << v << " -> n" << u << " [label=\"" << lbl << "\"];\n";
    }
  }
  for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v)
    out << "  n" << v << " -> n" << t.node_link(v) << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

Eertree parse_json(const std::string& doc) {
  json j = json::parse(doc);
  Options opt;
  opt.sigma = j.at("sigma").get<std::uint32_t>();
  if (!j.at("theta").is_null()) opt.theta = j.at("theta").get<std::vector<Symbol>>();
  opt.mode = Mode::Basic;

  std::vector<Symbol> text;
  if (j.contains("textSymbols") && !j.at("textSymbols").is_null()) {
    text = j.at("textSymbols").get<std::vector<Symbol>>();
  } else {
    for (unsigned char b : j.at("text").get<std::string>()) text.push_back(b);
  }

  // First pass: lens and links; second: parents from edges.
  std::size_t count = j.at("nodes").size();
  if (count < 2) throw std::invalid_argument("eertree document must contain the two roots");
  std::vector<Eertree::NodeSpec> specs(count - 2);
  for (const auto& node : j.at("nodes")) {
    NodeId v = internal_id(node.at("id").get<std::int64_t>());
    if (v == kRootNeg || v == kRootZero) continue;
    auto& s = specs.at(static_cast<std::size_t>(v) - 2);
    s.len = node.at("len").get<std::int32_t>();
    s.link = internal_id(node.at("link").get<std::int64_t>());
  }
  for (const auto& node : j.at("nodes")) {
    NodeId v = internal_id(node.at("id").get<std::int64_t>());
    for (const auto& [key, val] : node.at("edges").items()) {
      NodeId u = internal_id(val.get<std::int64_t>());
      auto& s = specs.at(static_cast<std::size_t>(u) - 2);
      s.parent = v;
      s.sym = static_cast<Symbol>(std::stoul(key));
    }
  }
  NodeId max_suf = internal_id(j.at("maxSuf").get<std::int64_t>());
  return Eertree::from_structure(std::move(opt), std::move(text), specs, max_suf);
}

bool structurally_equal(const Eertree& a, const Eertree& b) {
  if (a.text() != b.text() || a.size() != b.size()) return false;
  using Key = std::vector<Symbol>;
  // Roots get out-of-alphabet sentinel strings so link targets compare.
  auto name = [](const Eertree& t, NodeId v) -> Key {
    if (v == kRootNeg) return {~Symbol{0}};
    if (v == kRootZero) return {~Symbol{0} - 1};
    return t.node_symbols(v);
  };
  using Desc = std::tuple<std::int32_t, Key, Key, Symbol>;  // len, link, parent, sym
  auto describe = [&](const Eertree& t) {
    std::map<Key, Desc> out;
    for (NodeId v = 2; v < static_cast<NodeId>(t.size()); ++v)
      out[name(t, v)] = {t.node_len(v), name(t, t.node_link(v)), name(t, t.node_parent(v)),
                         t.node_symbol(v)};
    return out;
  };
  return describe(a) == describe(b) && name(a, a.max_suf()) == name(b, b.max_suf());
}

}  // namespace eertree
