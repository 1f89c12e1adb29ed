#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cox/davis.hpp"
#include "cox/word_engine.hpp"

namespace cox {

// A Coxeter generating set presented inside the ambient group: labelled
// involutions together with the defining graph they satisfy. elements[i]
// is the ambient canonical word of the generator labelled graph.name(i).
struct GeneratingSet {
  DefiningGraph graph;
  std::vector<Word> elements;
};

GeneratingSet standard_set(const DefiningGraph& g);

// Checks element involutivity and that graph labels match ambient product
// orders (finite ones exactly, infinite ones at the cutoff).
void verify_generating_set(const WordEngine& amb, const GeneratingSet& s, int cutoff = 100);

// A generating set bound to the ambient engine, plus the word engine of its
// own abstract presentation (the reference complex). Base condition (ii)
// is evaluated in the reference complex, never the ambient one.
class MarkedSet {
 public:
  MarkedSet(const WordEngine& ambient, GeneratingSet s);

  const WordEngine& ambient() const { return *amb_; }
  const WordEngine& reference() const { return *ref_; }
  const GeneratingSet& set() const { return set_; }
  const DefiningGraph& graph() const { return set_.graph; }
  int rank() const { return set_.graph.rank(); }

  const Word& element(Gen label) const { return set_.elements[label]; }
  // Word over labels -> ambient element.
  Word resolve(const std::vector<Gen>& labels) const;

  // Throws unsupported unless the set is irreducible, non-spherical and FC.
  void require_pipeline() const;

 private:
  const WordEngine* amb_;
  GeneratingSet set_;
  std::unique_ptr<WordEngine> ref_;
};

// ---- bases and markings ----------------------------------------------

struct Base {
  Gen core;
  std::vector<Gen> letters;
  GenSet support() const {
    GenSet s = single(core);
    for (Gen j : letters) s |= single(j);
    return s;
  }
  bool simple() const;
  bool operator==(const Base&) const = default;
};

struct Marking {
  Base base;
  Gen marker;
  bool simple() const { return base.simple(); }
  bool operator==(const Marking&) const = default;
};

bool is_base(const MarkedSet& ms, Gen core, const std::vector<Gen>& letters);

// The unique simple base with the given irreducible spherical support.
Base simple_base(const MarkedSet& ms, Gen core, GenSet support);

Marking make_marking(const MarkedSet& ms, const Base& base, Gen marker);

// Phi_s^mu: the halfspace of the core's wall containing the moved marker wall.
Halfspace marking_halfspace(const MarkedSet& ms, const Marking& mu, int cutoff = 100);

// Markings reachable by one M1 (marker shift) or M2 (trailing letter) move.
std::vector<Marking> move_neighbors(const MarkedSet& ms, const Marking& mu);
bool move_equivalent(const MarkedSet& ms, const Marking& a, const Marking& b);

// A simple marking with support containing i and the given core.
Marking find_simple_marking(const MarkedSet& ms, GenSet i, Gen core);

// K^mu_I: J \ (I u I^perp) when J != I, else {marker}.
GenSet k_support(const MarkedSet& ms, const Marking& mu, GenSet i);

// Phi_s^{t,A} for a component A of S \ ({s,t} u {s,t}^perp).
Halfspace component_halfspace(const MarkedSet& ms, Gen s, Gen t, GenSet comp, int cutoff = 100);

// ---- goodness, exposedness (defining-graph combinatorics) -------------

bool is_good_element(const DefiningGraph& g, GenSet L, Gen t, Gen r);
bool is_good_pair(const DefiningGraph& g, GenSet L, Gen s, Gen t, Gen r);
bool is_exposed(const DefiningGraph& g, GenSet L);

struct ComponentKind {
  bool big = false;      // contains r with {s,t,r} not spherical
  bool exposed = false;  // contains p with {s,t,p} irreducible spherical exposed
};
ComponentKind component_kind(const DefiningGraph& g, Gen s, Gen t, GenSet comp);

// ---- fundamental domain selection --------------------------------------

// Delta^mu: the geometric fundamental domain for L contained in Phi^mu.
FundamentalDomain domain_for_marking(const MarkedSet& ms, const Marking& mu, GenSet L,
                                     int radius = 10, int cutoff = 100);

// Delta^{{s,t},r}; when both s and t are good the two selections are
// asserted equal.
FundamentalDomain domain_for_good_pair(const MarkedSet& ms, GenSet L, Gen s, Gen t, Gen r,
                                       int radius = 10, int cutoff = 100);

// Delta^{L,r} under consistent doubles: independent of the chosen pair.
FundamentalDomain domain_for_subset(const MarkedSet& ms, GenSet L, Gen r, int radius = 10,
                                    int cutoff = 100);

// ---- consistency of doubles --------------------------------------------

// All simple markings with support containing i and core in `cores`.
std::vector<Marking> simple_markings_over(const MarkedSet& ms, GenSet i, GenSet cores);

// Every base with the given core (letter-extension walk; prefixes of bases
// are bases, so the walk is complete), and every marking of the set.
std::vector<Base> all_bases(const MarkedSet& ms, Gen core);
std::vector<Marking> all_markings(const MarkedSet& ms);

bool doubles_consistent(const MarkedSet& ms, Gen s, Gen t, int radius = 10, int cutoff = 100);
bool has_consistent_doubles(const MarkedSet& ms, int radius = 10, int cutoff = 100);

bool components_compatible(const MarkedSet& ms, Gen s, Gen t, GenSet a1, GenSet a2,
                           int cutoff = 100);
bool self_compatible(const MarkedSet& ms, Gen s, Gen t, GenSet a, int radius = 10,
                     int cutoff = 100);

// Number of maximal spherical L whose cell meets sV u V u tV.
int consistency_count(const MarkedSet& ms, Gen s, Gen t, const FundamentalDomain& v,
                      int radius = 10);

// Inconsistent doubles maximizing the consistency count over both domains.
std::vector<std::pair<Gen, Gen>> peripheral_doubles(const MarkedSet& ms, int radius = 10,
                                                    int cutoff = 100);

// All irreducible spherical non-commuting pairs, ascending.
std::vector<std::pair<Gen, Gen>> spherical_pairs(const DefiningGraph& g);

}  // namespace cox
