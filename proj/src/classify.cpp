#include "cox/classify.hpp"

#include <algorithm>

#include "cox/word_engine.hpp"

namespace cox {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2";
  }
  return "?";
}

// Branch lengths (vertex counts) of a tree with a unique degree-3 node.
std::array<int, 3> branch_lengths(const DefiningGraph& g, const std::vector<Gen>& verts,
                                  Gen center) {
  std::array<int, 3> lens{};
  int k = 0;
  for (Gen first : verts) {
    if (first == center || !g.dynkin_adjacent(center, first)) continue;
    int len = 1;
    Gen prev = center, cur = first;
    for (bool extended = true; extended;) {
      extended = false;
      for (Gen next : verts)
        if (next != prev && next != cur && g.dynkin_adjacent(cur, next)) {
          prev = cur;
          cur = next;
          ++len;
          extended = true;
          break;
        }
    }
    lens[k++] = len;
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

FactorType infinite_factor(GenSet comp) {
  FactorType f;
  f.gens = comp;
  f.finite = false;
  f.rank = size_of(comp);
  return f;
}

FactorType classify_component(const DefiningGraph& g, GenSet comp) {
  FactorType f;
  f.gens = comp;
  f.rank = size_of(comp);
  f.finite = true;
  auto verts = members(comp);

  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t k = i + 1; k < verts.size(); ++k)
      if (!finite_m(g.label(verts[i], verts[k]))) return infinite_factor(comp);

  if (f.rank == 1) {
    f.family = Family::A;
    return f;
  }
  if (f.rank == 2) {
    f.m = g.label(verts[0], verts[1]);
    f.family = f.m == 3 ? Family::A : f.m == 4 ? Family::B : Family::I2;
    return f;
  }

  int edges = 0, maxdeg = 0;
  Gen center = -1;
  bool all3 = true;
  for (Gen v : verts) {
    int deg = 0;
    for (Gen u : verts)
      if (g.dynkin_adjacent(v, u)) {
        ++deg;
        if (u > v) {
          ++edges;
          if (g.label(v, u) != 3) all3 = false;
        }
      }
    if (deg > maxdeg) {
      maxdeg = deg;
      center = v;
    }
  }
  if (edges != f.rank - 1 || maxdeg > 3) return infinite_factor(comp);

  if (maxdeg == 3) {
    int branched = 0;
    for (Gen v : verts) {
      int deg = 0;
      for (Gen u : verts) deg += g.dynkin_adjacent(v, u);
      branched += deg == 3;
    }
    if (branched != 1 || !all3) return infinite_factor(comp);
    auto lens = branch_lengths(g, verts, center);
    if (lens[0] == 1 && lens[1] == 1) {
      f.family = Family::D;
      return f;
    }
    if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4) {
      f.family = lens[2] == 2 ? Family::E6 : lens[2] == 3 ? Family::E7 : Family::E8;
      return f;
    }
    return infinite_factor(comp);
  }

  // Path: read the label sequence from one endpoint.
  Gen end = -1;
  for (Gen v : verts) {
    int deg = 0;
    for (Gen u : verts) deg += g.dynkin_adjacent(v, u);
    if (deg == 1) { end = v; break; }
  }
  std::vector<int> labels;
  Gen prev = -1, cur = end;
  while (true) {
    Gen next = -1;
    for (Gen u : verts)
      if (u != prev && g.dynkin_adjacent(cur, u)) { next = u; break; }
    if (next < 0) break;
    labels.push_back(g.label(cur, next));
    prev = cur;
    cur = next;
  }
  int big = 0;
  for (int m : labels) big += m > 3;
  if (big == 0) {
    f.family = Family::A;
    return f;
  }
  if (big > 1) return infinite_factor(comp);
  size_t pos = 0;
  while (labels[pos] == 3) ++pos;
  int m = labels[pos];
  bool at_end = pos == 0 || pos == labels.size() - 1;
  if (m == 4) {
    if (at_end) { f.family = Family::B; return f; }
    if (f.rank == 4 && pos == 1) { f.family = Family::F4; return f; }
    return infinite_factor(comp);
  }
  if (m == 5 && at_end) {
    if (f.rank == 3) { f.family = Family::H3; return f; }
    if (f.rank == 4) { f.family = Family::H4; return f; }
  }
  return infinite_factor(comp);
}

}  // namespace

std::uint64_t FactorType::order() const {
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B: return (std::uint64_t{1} << rank) * factorial(rank);
    case Family::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
    case Family::F4: return 1152;
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::I2: return 2ull * m;
  }
  return 0;
}

int FactorType::reflection_count() const {
  switch (family) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::B: return rank * rank;
    case Family::D: return rank * (rank - 1);
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::F4: return 24;
    case Family::H3: return 15;
    case Family::H4: return 60;
    case Family::I2: return m;
  }
  return 0;
}

int FactorType::coxeter_number() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank;
    case Family::D: return 2 * rank - 2;
    case Family::E6: return 12;
    case Family::E7: return 18;
    case Family::E8: return 30;
    case Family::F4: return 12;
    case Family::H3: return 10;
    case Family::H4: return 30;
    case Family::I2: return m;
  }
  return 0;
}

std::string FactorType::to_string() const {
  if (!finite) return "Infinite";
  std::string s = family_name(family);
  if (family == Family::I2) return "I2(" + std::to_string(m) + ")";
  if (family == Family::A || family == Family::B || family == Family::D)
    s += std::to_string(rank);
  return s;
}

bool SphericalType::spherical() const {
  for (const auto& f : factors)
    if (!f.finite) return false;
  return true;
}

std::uint64_t SphericalType::order() const {
  std::uint64_t n = 1;
  for (const auto& f : factors) n *= f.order();
  return n;
}

std::string SphericalType::to_string() const {
  if (factors.empty()) return "(empty)";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " x ";
    s += f.to_string();
  }
  return s;
}

SphericalType classify(const DefiningGraph& g, GenSet j) {
  check_subset(g, j);
  SphericalType t;
  for (GenSet comp : dynkin_components(g, j)) t.factors.push_back(classify_component(g, comp));
  return t;
}

bool is_spherical(const DefiningGraph& g, GenSet j) { return classify(g, j).spherical(); }

std::vector<GenSet> maximal_cliques(const DefiningGraph& g) {
  std::vector<GenSet> cliques;
  int n = g.rank();
  for (GenSet s = 1; s < (GenSet{1} << n); ++s) {
    bool clique = true;
    auto verts = members(s);
    for (size_t i = 0; i < verts.size() && clique; ++i)
      for (size_t k = i + 1; k < verts.size(); ++k)
        if (!g.adjacent(verts[i], verts[k])) { clique = false; break; }
    if (!clique) continue;
    bool maximal = true;
    for (Gen v = 0; v < n && maximal; ++v) {
      if (contains(s, v)) continue;
      bool extends = true;
      for (Gen u : verts)
        if (!g.adjacent(v, u)) { extends = false; break; }
      if (extends) maximal = false;
    }
    if (maximal) cliques.push_back(s);
  }
  return cliques;
}

bool is_fc(const DefiningGraph& g) {
  for (GenSet c : maximal_cliques(g))
    if (!is_spherical(g, c)) return false;
  return true;
}

std::vector<GenSet> maximal_spherical_subsets(const DefiningGraph& g) {
  if (!is_fc(g))
    throw CoxError(Err::unsupported, "maximal spherical subsets require an FC graph");
  // Under FC the spherical subsets are exactly the cliques.
  return maximal_cliques(g);
}

std::pair<DefiningGraph, std::vector<Gen>> induced_subgraph(const DefiningGraph& g, GenSet j) {
  auto verts = members(j);
  std::vector<std::string> names;
  for (Gen v : verts) names.push_back(g.name(v));
  DefiningGraph sub(names);
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t k = i + 1; k < verts.size(); ++k) {
      int m = g.label(verts[i], verts[k]);
      if (finite_m(m)) sub.set_label(static_cast<Gen>(i), static_cast<Gen>(k), m);
    }
  return {sub, verts};
}

int reflection_count(const DefiningGraph& g, GenSet j) {
  auto t = classify(g, j);
  if (!t.spherical()) throw CoxError(Err::not_spherical, "subset is not spherical");
  int n = 0;
  for (const auto& f : t.factors) n += f.reflection_count();
  return n;
}

namespace {

// w_J for one irreducible finite factor: alternating product of the two
// commuting parts of its Dynkin diagram, h factors in total.
Word longest_of_factor(const DefiningGraph& g, const FactorType& f) {
  auto verts = members(f.gens);
  std::vector<int> color(verts.size(), -1);
  color[0] = 0;
  for (bool grew = true; grew;) {
    grew = false;
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t k = 0; k < verts.size(); ++k)
        if (color[i] >= 0 && color[k] < 0 && g.dynkin_adjacent(verts[i], verts[k])) {
          color[k] = 1 - color[i];
          grew = true;
        }
  }
  Word part[2];
  for (size_t i = 0; i < verts.size(); ++i) part[color[i]].push_back(static_cast<char>(verts[i]));

  Word w;
  int h = f.coxeter_number();
  for (int i = 0; i < h; ++i) w += part[i % 2];
  return w;
}

}  // namespace

Word longest_element(const DefiningGraph& g, GenSet j) {
  auto t = classify(g, j);
  if (!t.spherical()) throw CoxError(Err::not_spherical, "longest element needs a spherical subset");
  Word w;
  for (const auto& f : t.factors) w += longest_of_factor(g, f);
  return w;
}

std::array<Gen, 32> opposition(const DefiningGraph& g, GenSet j) {
  auto t = classify(g, j);
  if (t.factors.size() != 1 || !t.spherical())
    throw CoxError(Err::invalid_subset, "opposition needs an irreducible spherical subset");

  auto [sub, back] = induced_subgraph(g, j);
  WordEngine engine(sub);
  Word w0 = longest_element(sub, sub.all());

  std::array<Gen, 32> op;
  for (int i = 0; i < 32; ++i) op[i] = i;
  for (Gen i = 0; i < sub.rank(); ++i) {
    Word conj = engine.reduce(w0 + static_cast<char>(i) + w0);
    if (conj.size() != 1)
      throw CoxError(Err::internal_error, "longest element does not normalize its factor");
    op[back[i]] = back[conj[0]];
  }
  return op;
}

}  // namespace cox
