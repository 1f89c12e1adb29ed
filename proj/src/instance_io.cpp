#include "cox/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cox/twist.hpp"

namespace cox {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

DefiningGraph parse_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw CoxError(Err::parse_error, "line " + std::to_string(lineno) + ": " + msg);
  };

  if (!std::getline(in, line)) fail("empty file");
  ++lineno;
  if (split_ws(line) != std::vector<std::string>{"cox", "v1"}) fail("expected header 'cox v1'");

  if (!std::getline(in, line)) fail("missing gens line");
  ++lineno;
  auto toks = split_ws(line);
  if (toks.empty() || toks[0] != "gens") fail("expected 'gens ...'");
  std::vector<std::string> names(toks.begin() + 1, toks.end());
  if (names.empty()) fail("no generators");
  std::unordered_set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) fail("duplicate generator name");

  DefiningGraph g(names);
  while (std::getline(in, line)) {
    ++lineno;
    toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] != "edge") fail("unknown directive '" + toks[0] + "'");
    if (toks.size() != 4) fail("edge needs two vertices and a label");
    Gen a = g.index_of(toks[1]), b = g.index_of(toks[2]);
    if (a < 0 || b < 0) fail("unknown vertex in edge");
    int m = 0;
    try {
      m = std::stoi(toks[3]);
    } catch (...) {
      fail("bad label '" + toks[3] + "'");
    }
    if (a == b || m < 2) fail("labels are symmetric, irreflexive and >= 2");
    if (finite_m(g.label(a, b))) fail("duplicate edge");
    g.set_label(a, b, m);
  }
  return g;
}

DefiningGraph load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CoxError(Err::parse_error, "cannot open '" + path + "'");
  return parse_instance(in);
}

void write_instance(std::ostream& out, const DefiningGraph& g) {
  out << "cox v1\n";
  out << "gens";
  for (const auto& n : g.names()) out << ' ' << n;
  out << '\n';
  for (Gen a = 0; a < g.rank(); ++a)
    for (Gen b = a + 1; b < g.rank(); ++b)
      if (finite_m(g.label(a, b)))
        out << "edge " << g.name(a) << ' ' << g.name(b) << ' ' << g.label(a, b) << '\n';
}

NamedWords parse_words(std::istream& in, const WordEngine& amb) {
  NamedWords nw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() < 3 || toks[1] != ":=")
      throw CoxError(Err::parse_error,
                     "line " + std::to_string(lineno) + ": expected 'name := letters'");
    nw.names.push_back(toks[0]);
    std::vector<std::string> letters(toks.begin() + 2, toks.end());
    if (letters.size() == 1 && letters[0] == "e") letters.clear();
    nw.words.push_back(amb.reduce(amb.parse(letters)));
  }
  if (nw.names.empty()) throw CoxError(Err::parse_error, "no generator words");
  return nw;
}

NamedWords load_words(const std::string& path, const WordEngine& amb) {
  std::ifstream in(path);
  if (!in) throw CoxError(Err::parse_error, "cannot open '" + path + "'");
  return parse_words(in, amb);
}

void write_words(std::ostream& out, const WordEngine& amb, const std::vector<std::string>& names,
                 const std::vector<Word>& words) {
  for (std::size_t i = 0; i < names.size(); ++i)
    out << names[i] << " := " << amb.spell(words[i]) << '\n';
}

GeneratingSet set_from_words(const WordEngine& amb, const NamedWords& nw, int cutoff) {
  DefiningGraph g(nw.names);
  for (std::size_t a = 0; a < nw.words.size(); ++a) {
    if (nw.words[a].empty() || !amb.mul(nw.words[a], nw.words[a]).empty())
      throw CoxError(Err::invalid_word, "'" + nw.names[a] + "' is not an involution");
    for (std::size_t b = a + 1; b < nw.words.size(); ++b) {
      auto ord = amb.product_order(nw.words[a], nw.words[b], cutoff);
      if (ord.finite) g.set_label(static_cast<Gen>(a), static_cast<Gen>(b), ord.order);
    }
  }
  return {g, nw.words};
}

DiscoverResult discover_instances(int max_n, const std::vector<int>& labels, std::size_t cap) {
  if (max_n > 7) throw CoxError(Err::unsupported, "discovery is capped at 7 generators");
  DiscoverResult result;
  std::unordered_set<std::string> seen;
  std::size_t processed = 0;

  std::vector<int> options = labels;  // finite labels; one extra slot for infinity
  std::sort(options.begin(), options.end());
  options.erase(std::unique(options.begin(), options.end()), options.end());
  options.push_back(infinite_m);

  for (int n = 1; n <= max_n && result.complete; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    const int pairs = n * (n - 1) / 2;
    std::vector<std::size_t> pick(pairs, 0);
    for (bool done = false; !done;) {
      if (++processed > cap) {
        result.complete = false;
        break;
      }
      DefiningGraph g(names);
      int k = 0;
      for (Gen a = 0; a < n; ++a)
        for (Gen b = a + 1; b < n; ++b, ++k)
          if (finite_m(options[pick[k]])) g.set_label(a, b, options[pick[k]]);

      DiscoveredInstance inst{g, false, false, false, false, false};
      inst.fc = is_fc(g);
      inst.irreducible = is_irreducible(g, g.all());
      inst.nonspherical = inst.fc ? !is_spherical(g, g.all()) : true;
      if (inst.fc && inst.irreducible && inst.nonspherical) {
        if (seen.insert(canonical_graph_key(g)).second) {
          try {
            inst.rigid3class = all_equivalents_k_rigid(g, 3, 1000);
          } catch (const CoxError&) {
            inst.rigid3class = false;
          }
          for (auto [s, t] : spherical_pairs(g))
            if (weakly_separates(g, single(s) | single(t))) inst.dihedral_twistable = true;
          if (inst.rigid3class) result.instances.push_back(std::move(inst));
        }
      }

      // next assignment
      done = true;
      for (int i = 0; i < pairs; ++i) {
        if (++pick[i] < options.size()) {
          done = false;
          break;
        }
        pick[i] = 0;
      }
    }
  }
  return result;
}

void write_catalog(std::ostream& out, const DiscoverResult& r) {
  out << "# discovered instances: " << r.instances.size()
      << (r.complete ? "" : " (partial: cap exceeded)") << '\n';
  for (const auto& inst : r.instances) {
    const DefiningGraph& g = inst.graph;
    out << "n=" << g.rank() << " edges=";
    bool first = true;
    for (Gen a = 0; a < g.rank(); ++a)
      for (Gen b = a + 1; b < g.rank(); ++b)
        if (finite_m(g.label(a, b))) {
          if (!first) out << ',';
          first = false;
          out << g.name(a) << '-' << g.name(b) << ':' << g.label(a, b);
        }
    out << " flags=fc,irreducible,nonspherical,rigid3class";
    if (inst.dihedral_twistable) out << ",dihedral-twistable";
    out << '\n';
  }
}

}  // namespace cox
