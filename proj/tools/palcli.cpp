#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eertree/analytics.hpp"
#include "eertree/eertree.hpp"
#include "eertree/factor.hpp"
#include "eertree/multi.hpp"
#include "eertree/offline.hpp"
#include "eertree/oracle.hpp"
#include "eertree/persistent.hpp"
#include "eertree/rich.hpp"
#include "eertree/serialize.hpp"

namespace {

using nlohmann::json;
using namespace eertree;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Common {
  std::string input;  // path; empty = stdin
  std::string mode = "quick";
  std::string theta_spec;
  std::string format = "json";
  std::size_t max_nodes = 0;
  std::uint64_t seed = 0;
  bool unicode = false;
  bool keep_newline = false;
};

Mode parse_mode(const std::string& m) {
  if (m == "basic") return Mode::Basic;
  if (m == "quick") return Mode::Quick;
  if (m == "direct") return Mode::Direct;
  throw CLI::ValidationError("--mode", "expected basic|quick|direct");
}

std::vector<Symbol> parse_theta(const std::string& spec, std::uint32_t sigma) {
  if (spec.empty()) return {};
  std::vector<Symbol> theta(sigma);
  for (Symbol c = 0; c < sigma; ++c) theta[c] = c;
  std::stringstream ss(spec);
  std::string pair;
  while (std::getline(ss, pair, ',')) {
    if (pair.size() != 3 || pair[1] != ':')
      throw CLI::ValidationError("--theta", "expected pairs like a:b,c:d");
    const Symbol a = static_cast<unsigned char>(pair[0]);
    const Symbol b = static_cast<unsigned char>(pair[2]);
    theta[a] = b;
    theta[b] = a;
  }
  return theta;
}

std::string read_all(const std::string& path) {
  if (path.empty()) {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("input", "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void strip_newline(std::string& s, bool keep) {
  if (!keep && !s.empty() && s.back() == '\n') s.pop_back();
}

// Minimal UTF-8 decode; invalid bytes are taken verbatim as Latin-1.
std::vector<std::uint32_t> decode_utf8(const std::string& bytes) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < bytes.size();) {
    const auto b = static_cast<unsigned char>(bytes[i]);
    std::size_t extra = b >= 0xF0 ? 3 : b >= 0xE0 ? 2 : b >= 0xC0 ? 1 : 0;
    if (extra == 0 || i + extra >= bytes.size()) {
      out.push_back(b);
      ++i;
      continue;
    }
    std::uint32_t cp = b & (0x3F >> extra);
    bool ok = true;
    for (std::size_t j = 1; j <= extra; ++j) {
      const auto c = static_cast<unsigned char>(bytes[i + j]);
      if ((c & 0xC0) != 0x80) ok = false;
      cp = (cp << 6) | (c & 0x3F);
    }
    if (ok) {
      out.push_back(cp);
      i += extra + 1;
    } else {
      out.push_back(b);
      ++i;
    }
  }
  return out;
}

struct LoadedText {
  std::vector<Symbol> symbols;
  std::uint32_t sigma = 256;
  std::vector<std::uint32_t> alphabet;  // dense id -> code point (unicode only)
};

LoadedText load_text(const Common& c) {
  std::string raw = read_all(c.input);
  strip_newline(raw, c.keep_newline);
  LoadedText t;
  if (!c.unicode) {
    t.symbols.reserve(raw.size());
    for (unsigned char b : raw) t.symbols.push_back(b);
    return t;
  }
  std::map<std::uint32_t, Symbol> ids;
  for (std::uint32_t cp : decode_utf8(raw)) {
    auto [it, fresh] = ids.try_emplace(cp, static_cast<Symbol>(ids.size()));
    if (fresh) t.alphabet.push_back(cp);
    t.symbols.push_back(it->second);
  }
  t.sigma = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(ids.size()));
  return t;
}

Options make_options(const Common& c, std::uint32_t sigma, std::size_t reserve) {
  Options opt;
  opt.sigma = sigma;
  opt.mode = parse_mode(c.mode);
  opt.theta = parse_theta(c.theta_spec, sigma);
  opt.max_nodes = c.max_nodes;
  opt.reserve = reserve;
  return opt;
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

// Streaming byte reader with one-symbol lookahead so a trailing newline can
// be dropped without buffering the input.
template <typename Sink>
void stream_bytes(const Common& c, Sink&& sink) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!c.input.empty()) {
    file.open(c.input, std::ios::binary);
    if (!file) throw CLI::ValidationError("input", "cannot read " + c.input);
    in = &file;
  }
  int pending = in->get();
  while (pending != std::istream::traits_type::eof()) {
    const int next = in->get();
    const bool last = next == std::istream::traits_type::eof();
    if (last && !c.keep_newline && pending == '\n') break;
    sink(static_cast<Symbol>(static_cast<unsigned char>(pending)));
    pending = next;
  }
}

int cmd_count(const Common& c) {
  if (c.unicode) {
    LoadedText t = load_text(c);
    Eertree tree(make_options(c, t.sigma, t.symbols.size()));
    for (Symbol s : t.symbols) tree.add(s);
    emit({{"distinct", tree.distinct_count()}});
    return kExitOk;
  }
  Eertree tree(make_options(c, 256, 0));
  stream_bytes(c, [&](Symbol s) { tree.add(s); });
  emit({{"distinct", tree.distinct_count()}});
  return kExitOk;
}

int cmd_build(const Common& c, bool offline) {
  LoadedText t = load_text(c);
  Eertree tree = [&] {
    if (offline) return build_offline(t.symbols, t.sigma, nullptr);
    Eertree online(make_options(c, t.sigma, t.symbols.size()));
    for (Symbol s : t.symbols) online.add(s);
    return online;
  }();
  if (c.format == "dot")
    std::cout << export_dot(tree);
  else
    std::cout << export_json(tree) << "\n";
  return kExitOk;
}

int cmd_refrain(const Common& c) {
  LoadedText t = load_text(c);
  Eertree tree(make_options(c, t.sigma, t.symbols.size()));
  for (Symbol s : t.symbols) tree.add(s);
  Refrain r = refrain(tree);
  json doc{{"palindrome", nullptr}, {"value", r.value}, {"occ", r.occ}};
  if (r.node != kNoNode) doc["palindrome"] = tree.node_string(r.node);
  emit(doc);
  return kExitOk;
}

int cmd_pairs(const Common& c) {
  LoadedText t = load_text(c);
  emit({{"pairs", palindromic_pairs(t.symbols, t.sigma)}});
  return kExitOk;
}

int cmd_occ(const Common& c) {
  LoadedText t = load_text(c);
  Eertree tree(make_options(c, t.sigma, t.symbols.size()));
  for (Symbol s : t.symbols) tree.add(s);
  const auto occ = compute_occ(tree);
  json table = json::object();
  std::int64_t total = 0;
  for (NodeId v = 2; v < static_cast<NodeId>(tree.size()); ++v) {
    table[tree.node_string(v)] = occ[static_cast<std::size_t>(v)];
    total += occ[static_cast<std::size_t>(v)];
  }
  emit({{"occ", table}, {"total", total}});
  return kExitOk;
}

std::vector<std::string> load_strings(const Common& c, const std::vector<std::string>& files) {
  std::vector<std::string> out;
  if (files.empty()) {
    std::string raw = read_all(c.input);
    strip_newline(raw, true);
    std::stringstream ss(raw);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
  } else {
    for (const auto& f : files) {
      std::string raw = read_all(f);
      strip_newline(raw, c.keep_newline);
      out.push_back(std::move(raw));
    }
  }
  return out;
}

int cmd_common(const Common& c, const std::vector<std::string>& files) {
  const auto strings = load_strings(c, files);
  if (strings.empty()) throw CLI::ValidationError("input", "need at least one string");
  JointEertree joint(strings.size(), make_options(c, 256, 0));
  for (const auto& s : strings) joint.add_string(s);
  json doc{{"count", joint.common_count()}, {"longest", nullptr}};
  if (auto best = joint.longest_common()) {
    std::string str;
    for (Symbol s : *best) str.push_back(static_cast<char>(s));
    doc["longest"] = str;
  }
  emit(doc);
  return kExitOk;
}

int cmd_two_string(const Common& c, const std::vector<std::string>& files, bool dominance) {
  const auto strings = load_strings(c, files);
  if (strings.size() != 2) throw CLI::ValidationError("input", "need exactly two strings");
  JointEertree joint(2, make_options(c, 256, 0));
  for (const auto& s : strings) joint.add_string(s);
  if (dominance)
    emit({{"dominance", joint.occ_dominance(0, 1)}});
  else
    emit({{"triples", joint.equal_palindrome_triples(0, 1)}});
  return kExitOk;
}

int cmd_pal_length(const Common& c, const std::string& parity) {
  PalFactorizer f(256);
  if (c.unicode) {
    LoadedText t = load_text(c);
    PalFactorizer uf(t.sigma, t.symbols.size());
    for (Symbol s : t.symbols) uf.push(s);
    f = std::move(uf);
  } else {
    stream_bytes(c, [&](Symbol s) { f.push(s); });
  }
  json arr = json::array();
  for (std::size_t i = 1; i <= f.length(); ++i) {
    if (parity == "odd")
      arr.push_back(f.ans_odd(i));
    else if (parity == "even")
      arr.push_back(f.ans_even(i));
    else
      arr.push_back(f.ans(i));
  }
  emit({{"ans", arr}});
  return kExitOk;
}

int cmd_k_factor(const Common& c, std::int64_t k) {
  LoadedText t = load_text(c);
  auto parts = k_factorization(t.symbols, k, t.sigma);
  if (!parts) {
    emit({{"parts", nullptr}});
    return kExitOk;
  }
  json arr = json::array();
  for (const auto& p : *parts) {
    std::string s;
    for (Symbol sym : p)
      s.push_back(static_cast<char>(c.unicode ? t.alphabet[sym] : sym));
    arr.push_back(s);
  }
  emit({{"parts", arr}});
  return kExitOk;
}

int cmd_rich(std::uint32_t sigma, std::uint32_t max_len, std::uint32_t par, bool fix_first,
             bool enumerate, std::size_t max_nodes) {
  if (enumerate) {
    enumerate_rich(
        sigma, max_len,
        [&](const std::vector<Symbol>& s) {
          std::string line;
          for (Symbol c : s) line.push_back(static_cast<char>('a' + c));
          std::cout << line << "\n";
          return true;
        },
        max_nodes);
    return kExitOk;
  }
  RichOptions opt;
  opt.fix_first_symbol = fix_first;
  opt.partition_depth = par;
  opt.max_nodes = max_nodes;
  const RichCensus census = count_rich(sigma, max_len, opt);
  emit({{"counts", census.counts}, {"addCalls", census.add_calls}});
  return kExitOk;
}

int cmd_versions(const Common& c, const std::string& script) {
  std::string raw = read_all(script.empty() ? c.input : script);
  std::stringstream ss(raw);
  PersistentEertree pt(256);
  std::string op;
  while (ss >> op) {
    if (op == "ADD") {
      std::int64_t parent;
      std::string sym;
      if (!(ss >> parent >> sym) || sym.size() != 1)
        throw CLI::ValidationError("script", "ADD <parent> <char>");
      const VersionId v = pt.add_version(static_cast<VersionId>(parent),
                                         static_cast<unsigned char>(sym[0]));
      emit({{"op", "add"}, {"version", v}});
    } else if (op == "QUERY") {
      std::int64_t id;
      if (!(ss >> id)) throw CLI::ValidationError("script", "QUERY <id>");
      const auto v = static_cast<VersionId>(id);
      json doc{{"op", "query"},
               {"id", v},
               {"len", pt.version_length(v)},
               {"count", pt.version_distinct_count(v)},
               {"maxSuf", nullptr}};
      if (auto ms = pt.version_max_suf(v)) {
        std::string s;
        for (Symbol sym : *ms) s.push_back(static_cast<char>(sym));
        doc["maxSuf"] = s;
      }
      emit(doc);
    } else {
      throw CLI::ValidationError("script", "unknown op " + op);
    }
  }
  return kExitOk;
}

int cmd_manacher(const Common& c) {
  LoadedText t = load_text(c);
  const RadiusArrays ra = manacher(t.symbols);
  emit({{"odd", ra.odd}, {"even", ra.even}});
  return kExitOk;
}

int cmd_oracle(const Common& c, const std::string& op, std::int64_t k) {
  LoadedText t = load_text(c);
  const oracle::Word w(t.symbols.begin(), t.symbols.end());
  if (op == "pal-set") {
    json arr = json::array();
    for (const auto& p : oracle::pal_set(w)) {
      std::string s;
      for (Symbol sym : p) s.push_back(static_cast<char>(sym));
      arr.push_back(s);
    }
    emit({{"palSet", arr}});
  } else if (op == "refrain") {
    emit({{"value", oracle::refrain_value(w)}});
  } else if (op == "pairs") {
    emit({{"pairs", oracle::palindromic_pairs(w)}});
  } else if (op == "pal-length") {
    emit({{"palLength", oracle::pal_length(w)}});
  } else if (op == "rich") {
    emit({{"rich", oracle::is_rich(w)}});
  } else if (op == "k-factorable") {
    emit({{"feasible", oracle::k_factorable(w, k)}});
  } else {
    throw CLI::ValidationError("oracle", "unknown op " + op);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"palindromic tree toolkit"};
  app.require_subcommand(1);

  Common c;
  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input) sub->add_option("input", c.input, "input file (default stdin)");
    sub->add_option("--mode", c.mode, "construction mode: basic|quick|direct");
    sub->add_option("--theta", c.theta_spec, "symbol involution pairs, e.g. A:T,C:G");
    sub->add_option("--format", c.format, "output format: json|dot");
    sub->add_option("--max-nodes", c.max_nodes, "palindrome node budget");
    sub->add_option("--seed", c.seed, "seed for test generators");
    sub->add_flag("--unicode", c.unicode, "treat input as UTF-8 code points");
    sub->add_flag("--keep-newline", c.keep_newline, "keep a trailing newline");
  };

  auto* count = app.add_subcommand("count", "distinct palindrome count");
  add_common(count);
  auto* build = app.add_subcommand("build", "build and export the tree");
  bool offline = false;
  build->add_flag("--offline", offline, "use the offline builder");
  add_common(build);
  auto* refrain_cmd = app.add_subcommand("refrain", "max |P| * occurrences");
  add_common(refrain_cmd);
  auto* pairs = app.add_subcommand("pairs", "adjacent palindrome pairs");
  add_common(pairs);
  auto* occ = app.add_subcommand("occ", "occurrence table");
  bool dump = false;
  occ->add_flag("--dump", dump, "dump the full table (always on)");
  add_common(occ);

  std::vector<std::string> files;
  auto* common_cmd = app.add_subcommand("common", "palindromes shared by all strings");
  common_cmd->add_option("files", files, "input files (default: stdin lines)");
  add_common(common_cmd, false);
  auto* dominance = app.add_subcommand("dominance", "palindromes more frequent in S than T");
  dominance->add_option("files", files, "two input files (default: stdin lines)");
  add_common(dominance, false);
  auto* triples = app.add_subcommand("triples", "equal palindrome occurrence pairs");
  triples->add_option("files", files, "two input files (default: stdin lines)");
  add_common(triples, false);

  auto* pal_len = app.add_subcommand("pal-length", "palindromic length per prefix");
  std::string parity;
  pal_len->add_option("--parity", parity, "odd|even parity minima");
  add_common(pal_len);
  auto* k_factor = app.add_subcommand("k-factor", "factor into exactly k palindromes");
  std::int64_t k = 0;
  k_factor->add_option("--k", k, "number of parts")->required();
  add_common(k_factor);

  auto* rich = app.add_subcommand("rich-count", "rich string census");
  std::uint32_t rich_sigma = 2, rich_n = 10, par = 0;
  bool enumerate = false, fix_first = false;
  rich->add_option("--sigma", rich_sigma, "alphabet size");
  rich->add_option("--max-len", rich_n, "maximum length");
  rich->add_option("--par", par, "partition depth for parallel counting");
  rich->add_flag("--enumerate", enumerate, "stream the strings instead");
  rich->add_flag("--fix-first", fix_first, "pin the first symbol and scale");
  rich->add_option("--max-nodes", c.max_nodes, "palindrome node budget");

  auto* versions = app.add_subcommand("versions", "persistent version script");
  std::string script;
  versions->add_option("--script", script, "script file (default stdin)");
  add_common(versions);

  auto* manacher_cmd = app.add_subcommand("manacher", "palindrome radius arrays");
  add_common(manacher_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference queries");
  std::string oracle_op;
  std::int64_t oracle_k = 1;
  oracle_cmd->add_option("op", oracle_op, "pal-set|refrain|pairs|pal-length|rich|k-factorable")
      ->required();
  oracle_cmd->add_option("--k", oracle_k, "k for k-factorable");
  add_common(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(c);
    if (build->parsed()) return cmd_build(c, offline);
    if (refrain_cmd->parsed()) return cmd_refrain(c);
    if (pairs->parsed()) return cmd_pairs(c);
    if (occ->parsed()) return cmd_occ(c);
    if (common_cmd->parsed()) return cmd_common(c, files);
    if (dominance->parsed()) return cmd_two_string(c, files, true);
    if (triples->parsed()) return cmd_two_string(c, files, false);
    if (pal_len->parsed()) return cmd_pal_length(c, parity);
    if (k_factor->parsed()) return cmd_k_factor(c, k);
    if (rich->parsed())
      return cmd_rich(rich_sigma, rich_n, par, fix_first, enumerate, c.max_nodes);
    if (versions->parsed()) return cmd_versions(c, script);
    if (manacher_cmd->parsed()) return cmd_manacher(c);
    if (oracle_cmd->parsed()) return cmd_oracle(c, oracle_op, oracle_k);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
