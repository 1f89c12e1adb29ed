#include "cox/twist.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cox {

bool weakly_separates(const DefiningGraph& g, GenSet j) {
  if (!is_irreducible(g, j) || !is_spherical(g, j))
    throw CoxError(Err::invalid_subset, "weak separation is for irreducible spherical subsets");
  GenSet rest = g.all() & ~(j | perp(g, j));
  return rest && components(g, rest).size() >= 2;
}

bool is_k_rigid(const DefiningGraph& g, int k) {
  for (GenSet j = 1; j < (GenSet{1} << g.rank()); ++j) {
    if (size_of(j) < k) continue;
    if (!is_irreducible(g, j) || !is_spherical(g, j)) continue;
    if (weakly_separates(g, j)) return false;
  }
  return true;
}

std::vector<ElementaryTwist> enumerate_twists(const DefiningGraph& g) {
  std::vector<ElementaryTwist> out;
  for (GenSet j = 1; j < (GenSet{1} << g.rank()); ++j) {
    if (!is_irreducible(g, j) || !is_spherical(g, j)) continue;
    GenSet rest = g.all() & ~(j | perp(g, j));
    if (!rest) continue;
    auto comps = components(g, rest);
    if (comps.size() < 2) continue;
    const std::uint32_t n = static_cast<std::uint32_t>(comps.size());
    for (std::uint32_t pick = 1; pick + 1 < (1u << n); ++pick) {
      ElementaryTwist t{j, 0, 0};
      for (std::uint32_t i = 0; i < n; ++i)
        (pick >> i & 1 ? t.b : t.a) |= comps[i];
      out.push_back(t);
    }
  }
  return out;
}

void validate_twist(const DefiningGraph& g, const ElementaryTwist& t) {
  if (!is_irreducible(g, t.j) || !is_spherical(g, t.j))
    throw CoxError(Err::invalid_twist, "J must be irreducible spherical");
  GenSet rest = g.all() & ~(t.j | perp(g, t.j));
  if (!t.a || !t.b || (t.a | t.b) != rest || (t.a & t.b))
    throw CoxError(Err::invalid_twist, "A, B must partition the complement nontrivially");
  for (GenSet c : components(g, rest))
    if (!subset_of(c, t.a) && !subset_of(c, t.b))
      throw CoxError(Err::invalid_twist, "a component straddles the partition");
}

DefiningGraph apply_twist_graph(const DefiningGraph& g, const ElementaryTwist& t) {
  validate_twist(g, t);
  auto op = opposition(g, t.j);
  DefiningGraph out(g.names());
  for (Gen x = 0; x < g.rank(); ++x)
    for (Gen y = x + 1; y < g.rank(); ++y) {
      Gen a = x, b = y;
      // a label between B and J reads through the opposition on the J end
      if (contains(t.b, a) && contains(t.j, b)) b = op[b];
      if (contains(t.b, b) && contains(t.j, a)) a = op[a];
      int m = g.label(a, b);
      if (finite_m(m)) out.set_label(x, y, m);
    }
  return out;
}

GeneratingSet apply_twist_generators(const WordEngine& amb, const GeneratingSet& s,
                                     const ElementaryTwist& t) {
  validate_twist(s.graph, t);
  Word w0_labels = longest_element(s.graph, t.j);
  Word w_amb;
  for (char l : w0_labels) w_amb += s.elements[l];
  w_amb = amb.reduce(w_amb);

  GeneratingSet out{apply_twist_graph(s.graph, t), s.elements};
  for (Gen b : members(t.b)) out.elements[b] = amb.conj(w_amb, s.elements[b]);
  return out;
}

GenSet twisted_subset(const DefiningGraph& g, GenSet L, const ElementaryTwist& t) {
  GenSet fixed_side = t.a | t.j | perp(g, t.j);
  GenSet moved_side = t.b | t.j | perp(g, t.j);
  if (subset_of(L, fixed_side)) return L;
  if (!subset_of(L, moved_side))
    throw CoxError(Err::invalid_subset, "subset straddles the twist partition");
  auto op = opposition(g, t.j);
  GenSet out = L & ~t.j;
  for (Gen j : members(L & t.j)) out |= single(op[j]);
  return out;
}

std::string canonical_graph_key(const DefiningGraph& g) {
  const int n = g.rank();
  if (n > 8) throw CoxError(Err::unsupported, "canonical form is capped at rank 8");
  std::vector<Gen> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::string best;
  do {
    std::string key;
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k) {
        int m = g.label(perm[i], perm[k]);
        key += finite_m(m) ? std::to_string(m) : "inf";
        key += ',';
      }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TwistClass twist_class(const DefiningGraph& g, std::size_t cap) {
  if (cap < 1) throw CoxError(Err::invalid_subset, "cap must be >= 1");
  TwistClass cls;
  std::unordered_set<std::string> seen{canonical_graph_key(g)};
  std::deque<DefiningGraph> queue{g};
  cls.graphs.push_back(g);
  while (!queue.empty()) {
    DefiningGraph cur = std::move(queue.front());
    queue.pop_front();
    for (const ElementaryTwist& t : enumerate_twists(cur)) {
      DefiningGraph next = apply_twist_graph(cur, t);
      if (!seen.insert(canonical_graph_key(next)).second) continue;
      if (cls.graphs.size() >= cap) {
        cls.complete = false;
        return cls;
      }
      cls.graphs.push_back(next);
      queue.push_back(next);
    }
  }
  return cls;
}

bool all_equivalents_k_rigid(const DefiningGraph& g, int k, std::size_t cap) {
  TwistClass cls = twist_class(g, cap);
  if (!cls.complete)
    throw CoxError(Err::cap_exhausted, "twist class exceeded the node cap");
  for (const DefiningGraph& node : cls.graphs)
    if (!is_k_rigid(node, k)) return false;
  return true;
}

}  // namespace cox
