#include "cox/defining_graph.hpp"

#include <algorithm>

namespace cox {

DefiningGraph::DefiningGraph(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 20)
    throw CoxError(Err::unsupported, "defining graphs are capped at 20 generators");
  m_.assign(names_.size() * names_.size(), infinite_m);
  for (int i = 0; i < rank(); ++i) m_[i * rank() + i] = 1;
}

Gen DefiningGraph::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<Gen>(it - names_.begin());
}

void DefiningGraph::set_label(Gen a, Gen b, int m) {
  if (a == b) throw CoxError(Err::parse_error, "labels are irreflexive");
  if (m < 2) throw CoxError(Err::parse_error, "labels must be >= 2");
  m_[a * rank() + b] = m;
  m_[b * rank() + a] = m;
}

void check_subset(const DefiningGraph& g, GenSet j) {
  if (!subset_of(j, g.all()))
    throw CoxError(Err::invalid_subset, "member not in graph");
}

GenSet perp(const DefiningGraph& g, GenSet j) {
  check_subset(g, j);
  if (!j) throw CoxError(Err::invalid_subset, "perp of empty subset");
  GenSet out = 0;
  for (Gen s = 0; s < g.rank(); ++s) {
    if (contains(j, s)) continue;
    bool commutes = true;
    for (Gen t : members(j))
      if (g.label(s, t) != 2) { commutes = false; break; }
    if (commutes) out |= single(s);
  }
  return out;
}

namespace {

template <typename Adj>
std::vector<GenSet> components_by(GenSet t, Adj&& adjacent) {
  std::vector<GenSet> out;
  GenSet left = t;
  while (left) {
    GenSet comp = single(least(left));
    for (GenSet grow = comp; grow;) {
      GenSet next = 0;
      for (Gen a : members(grow))
        for (Gen b : members(left & ~comp))
          if (adjacent(a, b)) next |= single(b);
      comp |= next;
      grow = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

}  // namespace

std::vector<GenSet> components(const DefiningGraph& g, GenSet t) {
  check_subset(g, t);
  return components_by(t, [&](Gen a, Gen b) { return g.adjacent(a, b); });
}

std::vector<GenSet> dynkin_components(const DefiningGraph& g, GenSet t) {
  check_subset(g, t);
  return components_by(t, [&](Gen a, Gen b) { return g.dynkin_adjacent(a, b); });
}

bool is_irreducible(const DefiningGraph& g, GenSet j) {
  check_subset(g, j);
  if (!j) throw CoxError(Err::invalid_subset, "empty subset");
  return dynkin_components(g, j).size() == 1;
}

}  // namespace cox
