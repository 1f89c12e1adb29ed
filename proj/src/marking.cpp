#include "cox/marking.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cox {

GeneratingSet standard_set(const DefiningGraph& g) {
  GeneratingSet s{g, {}};
  for (Gen i = 0; i < g.rank(); ++i) s.elements.push_back(Word(1, static_cast<char>(i)));
  return s;
}

void verify_generating_set(const WordEngine& amb, const GeneratingSet& s, int cutoff) {
  if (s.graph.rank() != static_cast<int>(s.elements.size()))
    throw CoxError(Err::graph_mismatch, "label/element count mismatch");
  for (const Word& e : s.elements)
    if (e.empty() || !amb.mul(e, e).empty())
      throw CoxError(Err::invalid_word, "generating set element is not an involution");
  for (Gen a = 0; a < s.graph.rank(); ++a)
    for (Gen b = a + 1; b < s.graph.rank(); ++b) {
      int m = s.graph.label(a, b);
      auto ord = amb.product_order(s.elements[a], s.elements[b], cutoff);
      if (finite_m(m) ? (!ord.finite || ord.order != m) : ord.finite)
        throw CoxError(Err::graph_mismatch, "label disagrees with ambient product order");
    }
}

MarkedSet::MarkedSet(const WordEngine& ambient, GeneratingSet s)
    : amb_(&ambient), set_(std::move(s)), ref_(std::make_unique<WordEngine>(set_.graph)) {
  if (set_.graph.rank() != static_cast<int>(set_.elements.size()))
    throw CoxError(Err::graph_mismatch, "label/element count mismatch");
  require_pipeline();
}

Word MarkedSet::resolve(const std::vector<Gen>& labels) const {
  Word w;
  for (Gen l : labels) w += set_.elements[l];
  return amb_->reduce(w);
}

void MarkedSet::require_pipeline() const {
  const DefiningGraph& g = set_.graph;
  if (g.rank() == 0 || !is_irreducible(g, g.all()) || is_spherical(g, g.all()) || !is_fc(g))
    throw CoxError(Err::unsupported,
                   "generating set must be irreducible, non-spherical, and FC");
}

bool Base::simple() const {
  GenSet seen = single(core);
  for (Gen j : letters) {
    if (contains(seen, j)) return false;
    seen |= single(j);
  }
  return true;
}

bool is_base(const MarkedSet& ms, Gen core, const std::vector<Gen>& letters) {
  const DefiningGraph& g = ms.graph();
  if (core < 0 || core >= g.rank()) throw CoxError(Err::invalid_subset, "unknown core");
  GenSet support = single(core);
  for (Gen j : letters) {
    if (j < 0 || j >= g.rank()) throw CoxError(Err::invalid_subset, "unknown letter");
    support |= single(j);
  }
  if (!is_spherical(g, support)) return false;
  // distance condition in the reference complex
  const WordEngine& ref = ms.reference();
  Word w;
  for (Gen j : letters) w.push_back(static_cast<char>(j));
  return distance_to_wall(ref, ref.reduce(w), Word(1, static_cast<char>(core))) ==
         static_cast<int>(letters.size());
}

Base simple_base(const MarkedSet& ms, Gen core, GenSet support) {
  const DefiningGraph& g = ms.graph();
  if (!contains(support, core)) throw CoxError(Err::invalid_subset, "core outside support");
  if (!is_irreducible(g, support) || !is_spherical(g, support))
    throw CoxError(Err::invalid_subset, "support must be irreducible spherical");
  Base base{core, {}};
  GenSet placed = single(core);
  while (placed != support) {
    Gen next = -1;
    for (Gen j : members(support & ~placed))
      if (is_irreducible(g, placed | single(j))) { next = j; break; }
    if (next < 0) throw CoxError(Err::internal_error, "no irreducible ordering of the support");
    base.letters.push_back(next);
    placed |= single(next);
  }
  if (!is_base(ms, core, base.letters))
    throw CoxError(Err::internal_error, "simple base failed the distance condition");
  return base;
}

Marking make_marking(const MarkedSet& ms, const Base& base, Gen marker) {
  if (marker < 0 || marker >= ms.rank()) throw CoxError(Err::invalid_subset, "unknown marker");
  if (!is_base(ms, base.core, base.letters))
    throw CoxError(Err::not_a_marking, "invalid base");
  if (is_spherical(ms.graph(), base.support() | single(marker)))
    throw CoxError(Err::not_a_marking, "support plus marker is spherical");
  return {base, marker};
}

Halfspace marking_halfspace(const MarkedSet& ms, const Marking& mu, int cutoff) {
  const WordEngine& amb = ms.ambient();
  const Word& s_wall = ms.element(mu.base.core);
  Word w = ms.resolve(mu.base.letters);
  Word moved = amb.conj(w, ms.element(mu.marker));
  return halfspace_toward_wall(amb, s_wall, moved, cutoff);
}

std::vector<Marking> move_neighbors(const MarkedSet& ms, const Marking& mu) {
  const DefiningGraph& g = ms.graph();
  std::vector<Marking> out;
  GenSet support = mu.base.support();

  // M1: shift the marker to an adjacent one.
  for (Gen m2 = 0; m2 < g.rank(); ++m2) {
    if (m2 == mu.marker || !g.adjacent(mu.marker, m2)) continue;
    if (is_spherical(g, support | single(m2))) continue;
    out.push_back({mu.base, m2});
  }
  // M2: drop the trailing letter when it is adjacent to the marker.
  if (!mu.base.letters.empty() && g.adjacent(mu.base.letters.back(), mu.marker)) {
    Base shorter{mu.base.core,
                 {mu.base.letters.begin(), mu.base.letters.end() - 1}};
    if (is_base(ms, shorter.core, shorter.letters) &&
        !is_spherical(g, shorter.support() | single(mu.marker)))
      out.push_back({shorter, mu.marker});
  }
  // M2: append a letter adjacent to the marker.
  for (Gen j = 0; j < g.rank(); ++j) {
    if (!g.adjacent(j, mu.marker)) continue;
    Base longer = mu.base;
    longer.letters.push_back(j);
    if (is_base(ms, longer.core, longer.letters)) out.push_back({longer, mu.marker});
  }
  return out;
}

bool move_equivalent(const MarkedSet& ms, const Marking& a, const Marking& b) {
  if (a.base.core != b.base.core)
    throw CoxError(Err::invalid_marking, "moves keep the core fixed");
  if (a == b) return true;
  std::set<std::pair<std::vector<Gen>, Gen>> seen{{a.base.letters, a.marker}};
  std::deque<Marking> queue{a};
  while (!queue.empty()) {
    Marking cur = std::move(queue.front());
    queue.pop_front();
    for (Marking& next : move_neighbors(ms, cur)) {
      if (next == b) return true;
      if (seen.insert({next.base.letters, next.marker}).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

Marking find_simple_marking(const MarkedSet& ms, GenSet i, Gen core) {
  const DefiningGraph& g = ms.graph();
  if (!contains(i, core)) throw CoxError(Err::invalid_subset, "core outside the subset");
  if (!is_irreducible(g, i) || !is_spherical(g, i))
    throw CoxError(Err::invalid_subset, "subset must be irreducible spherical");
  const GenSet all = g.all();
  for (int card = size_of(i); card <= g.rank(); ++card) {
    for (GenSet j = i; j <= all; ++j) {
      if (!subset_of(i, j) || size_of(j) != card || !subset_of(j, all)) continue;
      if (!is_irreducible(g, j) || !is_spherical(g, j)) continue;
      for (Gen m = 0; m < g.rank(); ++m) {
        if (contains(j, m) || is_spherical(g, j | single(m))) continue;
        return make_marking(ms, simple_base(ms, core, j), m);
      }
    }
  }
  throw CoxError(Err::internal_error, "no simple marking found (FC precondition violated?)");
}

GenSet k_support(const MarkedSet& ms, const Marking& mu, GenSet i) {
  if (!mu.simple()) throw CoxError(Err::invalid_marking, "K-support is for simple markings");
  if (!contains(i, mu.base.core) || !subset_of(i, mu.base.support()))
    throw CoxError(Err::invalid_subset, "I must contain the core and lie in the support");
  GenSet j = mu.base.support();
  if (j == i) return single(mu.marker);
  return j & ~(i | perp(ms.graph(), i));
}

namespace {

void require_spherical_pair(const DefiningGraph& g, Gen s, Gen t) {
  int m = g.label(s, t);
  if (s == t || !finite_m(m) || m < 3)
    throw CoxError(Err::invalid_subset, "need an irreducible spherical pair");
}

GenSet pair_complement(const DefiningGraph& g, Gen s, Gen t) {
  GenSet st = single(s) | single(t);
  return g.all() & ~(st | perp(g, st));
}

GenSet component_of(const DefiningGraph& g, GenSet domain, Gen r) {
  for (GenSet c : components(g, domain))
    if (contains(c, r)) return c;
  return 0;
}

}  // namespace

Halfspace component_halfspace(const MarkedSet& ms, Gen s, Gen t, GenSet comp, int cutoff) {
  const DefiningGraph& g = ms.graph();
  require_spherical_pair(g, s, t);
  auto comps = components(g, pair_complement(g, s, t));
  if (std::find(comps.begin(), comps.end(), comp) == comps.end())
    throw CoxError(Err::invalid_subset, "not a component of the pair complement");

  GenSet st = single(s) | single(t);
  for (Gen k : members(comp)) {
    if (is_spherical(g, st | single(k))) continue;
    Marking mu = make_marking(ms, Base{s, {t}}, k);
    return marking_halfspace(ms, mu, cutoff);
  }
  Gen k = least(comp);
  Marking mu = find_simple_marking(ms, st | single(k), s);
  if (!subset_of(k_support(ms, mu, st), comp))
    throw CoxError(Err::internal_error, "K-support escaped the component");
  return marking_halfspace(ms, mu, cutoff);
}

bool is_good_element(const DefiningGraph& g, GenSet L, Gen t, Gen r) {
  if (!contains(L, t)) throw CoxError(Err::invalid_subset, "t must lie in L");
  if (r == t || g.adjacent(r, t)) return false;
  GenSet tperp = perp(g, single(t));
  GenSet lrem = L & ~(single(t) | tperp);
  if (!lrem) return false;
  GenSet comp = component_of(g, g.all() & ~(single(t) | tperp), r);
  return comp && subset_of(lrem, comp);
}

bool is_good_pair(const DefiningGraph& g, GenSet L, Gen s, Gen t, Gen r) {
  require_spherical_pair(g, s, t);
  if (!contains(L, s) || !contains(L, t)) throw CoxError(Err::invalid_subset, "pair outside L");
  GenSet st = single(s) | single(t);
  if (is_spherical(g, st | single(r))) return false;
  GenSet lrem = L & ~(st | perp(g, st));
  if (!lrem) return false;
  GenSet domain = pair_complement(g, s, t);
  if (!contains(domain, r)) return false;
  GenSet comp = component_of(g, domain, r);
  return comp && subset_of(lrem, comp);
}

bool is_exposed(const DefiningGraph& g, GenSet L) {
  if (!is_irreducible(g, L) || !is_spherical(g, L))
    throw CoxError(Err::invalid_subset, "exposedness is for irreducible spherical subsets");
  const int n = size_of(L);
  if (n <= 2) return true;
  if (n > 3) return false;
  GenSet outside = g.all() & ~(L | perp(g, L));
  int isolated = 0;
  for (Gen l : members(L)) {
    bool touches = false;
    for (Gen x : members(outside))
      if (g.adjacent(l, x)) { touches = true; break; }
    if (!touches) ++isolated;
  }
  return isolated >= 2;
}

ComponentKind component_kind(const DefiningGraph& g, Gen s, Gen t, GenSet comp) {
  require_spherical_pair(g, s, t);
  ComponentKind kind;
  GenSet st = single(s) | single(t);
  for (Gen r : members(comp)) {
    GenSet triple = st | single(r);
    if (!is_spherical(g, triple)) {
      kind.big = true;
    } else if (is_irreducible(g, triple) && is_exposed(g, triple)) {
      // exposedness is only defined for irreducible spherical subsets
      kind.exposed = true;
    }
  }
  return kind;
}

FundamentalDomain domain_for_marking(const MarkedSet& ms, const Marking& mu, GenSet L,
                                     int radius, int cutoff) {
  if (!subset_of(mu.base.support(), L))
    throw CoxError(Err::invalid_subset, "marking support must lie in L");
  const WordEngine& amb = ms.ambient();
  std::vector<Word> elems;
  std::vector<Gen> order = members(L);
  for (Gen l : order) elems.push_back(ms.element(l));
  auto domains = geometric_domains(amb, elems, radius);
  Halfspace phi = marking_halfspace(ms, mu, cutoff);

  std::size_t idx = std::find(order.begin(), order.end(), mu.base.core) - order.begin();
  bool first = domains.first.sides[idx] == phi;
  bool second = domains.second.sides[idx] == phi;
  if (first == second)
    throw CoxError(Err::domain_selection_failed, "marking halfspace selects no unique domain");
  return first ? domains.first : domains.second;
}

FundamentalDomain domain_for_good_pair(const MarkedSet& ms, GenSet L, Gen s, Gen t, Gen r,
                                       int radius, int cutoff) {
  const DefiningGraph& g = ms.graph();
  if (!is_good_pair(g, L, s, t, r))
    throw CoxError(Err::invalid_subset, "pair is not good with respect to r");
  bool s_good = is_good_element(g, L, s, r);
  bool t_good = is_good_element(g, L, t, r);
  if (!s_good && !t_good)
    throw CoxError(Err::internal_error, "good pair without a good member");

  std::optional<FundamentalDomain> from_s, from_t;
  if (s_good)
    from_s = domain_for_marking(ms, make_marking(ms, Base{s, {t}}, r), L, radius, cutoff);
  if (t_good)
    from_t = domain_for_marking(ms, make_marking(ms, Base{t, {s}}, r), L, radius, cutoff);
  if (from_s && from_t && !(from_s->representative == from_t->representative))
    throw CoxError(Err::internal_error, "the two good-pair domains disagree");
  return from_s ? *from_s : *from_t;
}

FundamentalDomain domain_for_subset(const MarkedSet& ms, GenSet L, Gen r, int radius,
                                    int cutoff) {
  const DefiningGraph& g = ms.graph();
  std::optional<FundamentalDomain> result;
  for (Gen s : members(L))
    for (Gen t : members(L)) {
      if (s == t || !g.dynkin_adjacent(s, t)) continue;
      if (is_spherical(g, single(s) | single(t) | single(r))) continue;
      auto d = domain_for_marking(ms, make_marking(ms, Base{s, {t}}, r), L, radius, cutoff);
      if (result && !(result->representative == d.representative))
        throw CoxError(Err::domain_selection_failed, "domain depends on the chosen pair");
      result = std::move(d);
    }
  if (!result)
    throw CoxError(Err::invalid_subset, "no non-commuting pair of L avoids sphericity with r");
  return *result;
}

std::vector<Marking> simple_markings_over(const MarkedSet& ms, GenSet i, GenSet cores) {
  const DefiningGraph& g = ms.graph();
  std::vector<Marking> out;
  const GenSet all = g.all();
  for (GenSet j = 1; j <= all; ++j) {
    if (!subset_of(i, j) || !subset_of(j, all)) continue;
    if (!is_irreducible(g, j) || !is_spherical(g, j)) continue;
    for (Gen core : members(cores & j)) {
      Base base = simple_base(ms, core, j);
      for (Gen m = 0; m < g.rank(); ++m) {
        if (contains(j, m) || is_spherical(g, j | single(m))) continue;
        out.push_back({base, m});
      }
    }
  }
  return out;
}

bool doubles_consistent(const MarkedSet& ms, Gen s, Gen t, int radius, int cutoff) {
  require_spherical_pair(ms.graph(), s, t);
  GenSet st = single(s) | single(t);
  auto markings = simple_markings_over(ms, st, st);

  std::map<Gen, std::vector<Halfspace>> by_core;
  for (const Marking& mu : markings) {
    Halfspace h = marking_halfspace(ms, mu, cutoff);
    auto& seen = by_core[mu.base.core];
    if (std::find(seen.begin(), seen.end(), h) == seen.end()) seen.push_back(h);
  }
  for (const auto& [core, hs] : by_core)
    if (hs.size() > 1) return false;
  if (by_core.size() == 2) {
    const Halfspace& hs = by_core.begin()->second.front();
    const Halfspace& ht = std::next(by_core.begin())->second.front();
    return is_geometric_pair(ms.ambient(), hs, ht, radius, cutoff);
  }
  return true;
}

std::vector<Base> all_bases(const MarkedSet& ms, Gen core) {
  const DefiningGraph& g = ms.graph();
  std::vector<Base> out{{core, {}}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    Base cur = out[i];  // copy: out grows
    for (Gen j = 0; j < g.rank(); ++j) {
      if (!is_spherical(g, cur.support() | single(j))) continue;
      Base longer = cur;
      longer.letters.push_back(j);
      if (is_base(ms, core, longer.letters)) out.push_back(std::move(longer));
    }
  }
  return out;
}

std::vector<Marking> all_markings(const MarkedSet& ms) {
  const DefiningGraph& g = ms.graph();
  std::vector<Marking> out;
  for (Gen core = 0; core < g.rank(); ++core)
    for (const Base& base : all_bases(ms, core))
      for (Gen m = 0; m < g.rank(); ++m)
        if (!is_spherical(g, base.support() | single(m))) out.push_back({base, m});
  return out;
}

std::vector<std::pair<Gen, Gen>> spherical_pairs(const DefiningGraph& g) {
  std::vector<std::pair<Gen, Gen>> out;
  for (Gen s = 0; s < g.rank(); ++s)
    for (Gen t = s + 1; t < g.rank(); ++t) {
      int m = g.label(s, t);
      if (finite_m(m) && m >= 3) out.push_back({s, t});
    }
  return out;
}

bool has_consistent_doubles(const MarkedSet& ms, int radius, int cutoff) {
  for (auto [s, t] : spherical_pairs(ms.graph()))
    if (!doubles_consistent(ms, s, t, radius, cutoff)) return false;
  return true;
}

bool components_compatible(const MarkedSet& ms, Gen s, Gen t, GenSet a1, GenSet a2,
                           int cutoff) {
  return component_halfspace(ms, s, t, a1, cutoff) == component_halfspace(ms, s, t, a2, cutoff) &&
         component_halfspace(ms, t, s, a1, cutoff) == component_halfspace(ms, t, s, a2, cutoff);
}

bool self_compatible(const MarkedSet& ms, Gen s, Gen t, GenSet a, int radius, int cutoff) {
  Halfspace hs = component_halfspace(ms, s, t, a, cutoff);
  Halfspace ht = component_halfspace(ms, t, s, a, cutoff);
  return is_geometric_pair(ms.ambient(), hs, ht, radius, cutoff);
}

int consistency_count(const MarkedSet& ms, Gen s, Gen t, const FundamentalDomain& v,
                      int radius) {
  require_spherical_pair(ms.graph(), s, t);
  const WordEngine& amb = ms.ambient();
  const Word& se = ms.element(s);
  const Word& te = ms.element(t);
  int count = 0;
  for (GenSet L : maximal_spherical_subsets(ms.graph())) {
    std::vector<Word> elems;
    for (Gen l : members(L)) elems.push_back(ms.element(l));
    auto cell = fixed_maximal_cell(amb, elems, radius);
    bool meets = false;
    for (const Word& x : residue_chambers(amb, cell)) {
      if (domain_contains(amb, v, x) || domain_contains(amb, v, amb.mul(se, x)) ||
          domain_contains(amb, v, amb.mul(te, x))) {
        meets = true;
        break;
      }
    }
    count += meets;
  }
  return count;
}

std::vector<std::pair<Gen, Gen>> peripheral_doubles(const MarkedSet& ms, int radius,
                                                    int cutoff) {
  std::vector<std::pair<Gen, Gen>> inconsistent;
  for (auto [s, t] : spherical_pairs(ms.graph()))
    if (!doubles_consistent(ms, s, t, radius, cutoff)) inconsistent.push_back({s, t});
  if (inconsistent.empty()) return {};

  std::vector<int> counts;
  for (auto [s, t] : inconsistent) {
    std::vector<Word> pair{ms.element(s), ms.element(t)};
    auto domains = geometric_domains(ms.ambient(), pair, radius);
    counts.push_back(std::max(consistency_count(ms, s, t, domains.first, radius),
                              consistency_count(ms, s, t, domains.second, radius)));
  }
  int best = *std::max_element(counts.begin(), counts.end());
  std::vector<std::pair<Gen, Gen>> out;
  for (std::size_t i = 0; i < inconsistent.size(); ++i)
    if (counts[i] == best) out.push_back(inconsistent[i]);
  return out;
}

}  // namespace cox
