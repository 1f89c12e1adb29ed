#pragma once

#include <limits>
#include <string>
#include <vector>

#include "cox/errors.hpp"
#include "cox/subsets.hpp"

namespace cox {

// m_st for a pair with no relation. Absent edges in input files mean this.
inline constexpr int infinite_m = std::numeric_limits<int>::max();
inline bool finite_m(int m) { return m != infinite_m; }

// Generators with symmetric pairwise labels m >= 2 (infinite_m when absent).
// "Adjacent" means the label is finite; the Coxeter-Dynkin diagram keeps the
// edges with m != 2 instead.
class DefiningGraph {
 public:
  DefiningGraph() = default;
  explicit DefiningGraph(std::vector<std::string> names);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Gen g) const { return names_[g]; }
  Gen index_of(const std::string& name) const;  // -1 when absent

  int label(Gen a, Gen b) const { return m_[a * rank() + b]; }
  void set_label(Gen a, Gen b, int m);

  GenSet all() const { return full_set(rank()); }
  bool adjacent(Gen a, Gen b) const { return a != b && finite_m(label(a, b)); }
  // Dynkin adjacency: non-commuting pairs.
  bool dynkin_adjacent(Gen a, Gen b) const { return a != b && label(a, b) != 2; }

  bool operator==(const DefiningGraph& o) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> m_;
};

// Elements of S \ J commuting with all of J.
GenSet perp(const DefiningGraph& g, GenSet j);

// Connected components of the subgraph induced on t (defining-graph
// adjacency), ordered by least member.
std::vector<GenSet> components(const DefiningGraph& g, GenSet t);
// Same, with Dynkin adjacency (used to split into irreducible factors).
std::vector<GenSet> dynkin_components(const DefiningGraph& g, GenSet t);

// Connected in the Coxeter-Dynkin diagram, i.e. not inside K u K^perp.
bool is_irreducible(const DefiningGraph& g, GenSet j);

void check_subset(const DefiningGraph& g, GenSet j);

}  // namespace cox
