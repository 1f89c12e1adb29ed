#include <algorithm>
#include <map>

#include "cox/twist.hpp"

namespace cox {

namespace {

std::vector<Word> label_elements(const MarkedSet& ms, GenSet L) {
  std::vector<Word> out;
  for (Gen l : members(L)) out.push_back(ms.element(l));
  return out;
}

Residue cell_of_labels(const MarkedSet& ms, GenSet L, int radius) {
  return fixed_maximal_cell(ms.ambient(), label_elements(ms, L), radius);
}

// Leaves of the Coxeter-Dynkin diagram induced on li (degree <= 1).
bool dynkin_leaf(const DefiningGraph& g, GenSet li, Gen v) {
  int deg = 0;
  for (Gen u : members(li))
    if (u != v && g.dynkin_adjacent(u, v)) ++deg;
  return deg <= 1;
}

}  // namespace

std::vector<Word> residue_of(const MarkedSet& ms, GenSet L, int radius) {
  return residue_chambers(ms.ambient(), cell_of_labels(ms, L, radius));
}

std::vector<Word> frame_of(const MarkedSet& ms, GenSet L, int radius) {
  return frame_chambers(ms.ambient(), cell_of_labels(ms, L, radius), label_elements(ms, L));
}

// E_{L,I}: for each maximal irreducible factor L_i of L, keep the whole frame
// when L_i is exposed or inside I; otherwise cut C_L with the domain of a good
// pair of L_i with respect to some r in I, cross-checked against the
// characterization through Phi(W_s', w C_I).
std::vector<Word> oriented_frame(const MarkedSet& ms, GenSet L, GenSet I, int radius,
                                 int cutoff) {
  const DefiningGraph& g = ms.graph();
  const WordEngine& amb = ms.ambient();
  Residue cell = cell_of_labels(ms, L, radius);
  std::vector<Word> c_l = residue_chambers(amb, cell);
  std::vector<Word> keep = frame_chambers(amb, cell, label_elements(ms, L));

  for (GenSet li : dynkin_components(g, L)) {
    if (is_exposed(g, li) || subset_of(li, I)) continue;

    Gen r = -1;
    for (Gen cand : members(I))
      if (!is_spherical(g, li | single(cand))) { r = cand; break; }
    if (r < 0)
      throw CoxError(Err::internal_error, "maximal I has no witness against L_i");

    std::optional<FundamentalDomain> delta;
    auto mem = members(li);
    for (std::size_t x = 0; x < mem.size() && !delta; ++x)
      for (std::size_t y = 0; y < mem.size() && !delta; ++y) {
        if (x == y || !g.dynkin_adjacent(mem[x], mem[y])) continue;
        if (is_good_pair(g, li, mem[x], mem[y], r))
          delta = domain_for_good_pair(ms, li, mem[x], mem[y], r, radius, cutoff);
      }
    if (!delta)
      // Under the 3-rigid regime a non-exposed factor always carries a good
      // pair; running into this means the input sits outside that regime.
      throw CoxError(Err::unsupported,
                     "no good pair in a non-exposed factor: the oriented frame "
                     "needs the 3-rigid twist regime");

    // Alternate characterization: the domain of L_i containing Phi(W_s', w C_I)
    // for s' a non-leaf of L_i and (s', w) its simple base.
    Gen nonleaf = -1;
    for (Gen v : members(li))
      if (!dynkin_leaf(g, li, v)) { nonleaf = v; break; }
    if (nonleaf >= 0) {
      Base base = simple_base(ms, nonleaf, li);
      Word w = ms.resolve(base.letters);
      std::vector<Word> moved;
      for (const Word& x : residue_of(ms, I, radius)) moved.push_back(amb.mul(w, x));
      Halfspace phi = halfspace_containing(amb, ms.element(nonleaf), moved);
      auto it = std::find(delta->sides.begin(), delta->sides.end(), phi);
      bool agrees = it != delta->sides.end();
      if (!agrees) {
        bool opposite = std::find(delta->sides.begin(), delta->sides.end(), phi.opposite()) !=
                        delta->sides.end();
        if (!opposite)
          throw CoxError(Err::internal_error, "alternate E-set wall missing from the domain");
        throw CoxError(Err::internal_error, "E-set routes disagree");
      }
    }

    std::vector<Word> next;
    for (const Word& x : keep)
      if (domain_contains(amb, *delta, x)) next.push_back(x);
    keep = std::move(next);
  }
  if (keep.empty()) throw CoxError(Err::internal_error, "empty oriented frame");
  return keep;
}

ComplexityValue complexity(const MarkedSet& ms, int radius, int cutoff) {
  ms.require_pipeline();
  auto maximals = maximal_spherical_subsets(ms.graph());
  const WordEngine& amb = ms.ambient();

  std::map<GenSet, std::vector<Word>> cells;
  for (GenSet L : maximals) cells[L] = residue_of(ms, L, radius);

  ComplexityValue value;
  for (GenSet L : maximals)
    for (GenSet I : maximals) {
      if (L == I) continue;
      value.k1 += set_distance(amb, cells[L], cells[I]);
      value.k2 += set_distance(amb, oriented_frame(ms, L, I, radius, cutoff),
                               oriented_frame(ms, I, L, radius, cutoff));
    }
  return value;
}

ElementaryTwist partition_twist(const MarkedSet& ms, Gen s, Gen t,
                                const std::optional<std::pair<GenSet, GenSet>>& expected,
                                int cutoff) {
  const DefiningGraph& g = ms.graph();
  GenSet st = single(s) | single(t);
  GenSet rest = g.all() & ~(st | perp(g, st));
  auto comps = components(g, rest);

  std::map<Halfspace, GenSet> groups;
  std::map<Halfspace, GenSet> groups_t;
  for (GenSet c : comps) {
    groups[component_halfspace(ms, s, t, c, cutoff)] |= c;
    groups_t[component_halfspace(ms, t, s, c, cutoff)] |= c;
  }
  if (groups.size() == 1 && groups_t.size() == 1)
    throw CoxError(Err::invalid_twist, "all components share one halfspace; no partition");
  auto& side_groups = groups.size() > 1 ? groups : groups_t;
  if (side_groups.size() != 2)
    throw CoxError(Err::internal_error, "component halfspaces split into more than two");

  GenSet g1 = side_groups.begin()->second;
  GenSet g2 = std::next(side_groups.begin())->second;
  // B is the group away from the least-labelled component.
  ElementaryTwist tw{st, 0, 0};
  if (contains(g1, least(rest))) {
    tw.a = g1;
    tw.b = g2;
  } else {
    tw.a = g2;
    tw.b = g1;
  }
  if (expected && !(expected->first == tw.a && expected->second == tw.b))
    throw CoxError(Err::invalid_twist, "assignment does not match the halfspace grouping");
  validate_twist(g, tw);
  return tw;
}

ElementaryTwist partition_twist_single(const MarkedSet& ms, Gen s, int cutoff) {
  const DefiningGraph& g = ms.graph();
  GenSet rest = g.all() & ~(single(s) | perp(g, single(s)));
  auto comps = components(g, rest);

  // Phi_s^A per component, via a simple marking with K-support in A.
  std::map<Halfspace, GenSet> groups;
  std::map<Halfspace, int> counts;
  for (GenSet c : comps) {
    Gen k = least(c);
    Marking mu = g.adjacent(s, k) ? find_simple_marking(ms, single(s) | single(k), s)
                                  : make_marking(ms, Base{s, {}}, k);
    if (!subset_of(k_support(ms, mu, single(s)), c))
      throw CoxError(Err::internal_error, "K-support escaped the component");
    Halfspace h = marking_halfspace(ms, mu, cutoff);
    groups[h] |= c;
    counts[h] += 1;
  }
  if (groups.size() == 1)
    throw CoxError(Err::invalid_twist, "all components share one halfspace; no partition");

  GenSet m1 = groups.begin()->second, m2 = std::next(groups.begin())->second;
  int c1 = counts.begin()->second, c2 = std::next(counts.begin())->second;
  GenSet bset = c1 != c2 ? (c1 < c2 ? m1 : m2) : (contains(m1, least(rest)) ? m2 : m1);
  ElementaryTwist tw{single(s), rest & ~bset, bset};
  validate_twist(g, tw);
  return tw;
}

}  // namespace cox
