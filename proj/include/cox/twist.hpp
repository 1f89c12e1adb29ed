#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cox/marking.hpp"

namespace cox {

// Conjugation of the side B by the longest element of <J>.
struct ElementaryTwist {
  GenSet j = 0;
  GenSet a = 0;
  GenSet b = 0;
  bool operator==(const ElementaryTwist&) const = default;
};

bool weakly_separates(const DefiningGraph& g, GenSet j);
bool is_k_rigid(const DefiningGraph& g, int k);

// All (J, A, B) with J irreducible spherical weakly separating and (A, B) a
// component-respecting ordered bipartition, both sides nonempty.
std::vector<ElementaryTwist> enumerate_twists(const DefiningGraph& g);

void validate_twist(const DefiningGraph& g, const ElementaryTwist& t);

// Label update: labels inside A u J u J^perp and inside B unchanged; labels
// between B and J relabelled through the opposition of J.
DefiningGraph apply_twist_graph(const DefiningGraph& g, const ElementaryTwist& t);

GeneratingSet apply_twist_generators(const WordEngine& amb, const GeneratingSet& s,
                                     const ElementaryTwist& t);

// The label set of L_tau (L maximal spherical, or irreducible in a maximal one).
GenSet twisted_subset(const DefiningGraph& g, GenSet L, const ElementaryTwist& t);

// Canonical form of a labelled graph under vertex permutations (rank <= 8).
std::string canonical_graph_key(const DefiningGraph& g);

struct TwistClass {
  std::vector<DefiningGraph> graphs;  // one representative per canonical key, BFS order
  bool complete = true;               // false when the node cap was hit
};
TwistClass twist_class(const DefiningGraph& g, std::size_t cap);
bool all_equivalents_k_rigid(const DefiningGraph& g, int k, std::size_t cap);

// ---- complexity ---------------------------------------------------------

struct ComplexityValue {
  long long k1 = 0;
  long long k2 = 0;
  auto operator<=>(const ComplexityValue&) const = default;  // lexicographic
};

// C_L and D_L for a maximal spherical label set L.
std::vector<Word> residue_of(const MarkedSet& ms, GenSet L, int radius = 10);
std::vector<Word> frame_of(const MarkedSet& ms, GenSet L, int radius = 10);

// E_{L,I}: the sub-frame of D_L turned toward I.
std::vector<Word> oriented_frame(const MarkedSet& ms, GenSet L, GenSet I, int radius = 10,
                                 int cutoff = 100);

ComplexityValue complexity(const MarkedSet& ms, int radius = 10, int cutoff = 100);

// The partition twist of an inconsistent pair: components grouped by their
// component halfspace, B the group away from the least-labelled component.
// `expected` (when given) is validated against the computed grouping.
ElementaryTwist partition_twist(const MarkedSet& ms, Gen s, Gen t,
                                const std::optional<std::pair<GenSet, GenSet>>& expected = {},
                                int cutoff = 100);
// J = {s} variant: components of S \ (s u s^perp) grouped by core-s halfspace,
// B the side with fewer components.
ElementaryTwist partition_twist_single(const MarkedSet& ms, Gen s, int cutoff = 100);

// ---- minimization and conjugacy ----------------------------------------

struct MinimizeResult {
  GeneratingSet best;
  ComplexityValue value;
  std::vector<ElementaryTwist> sequence;  // applied left to right from the input set
  bool exhaustive = true;                 // search closed before depth/cap truncation
  bool saw_large_twist = false;           // a twist with |J| >= 3 was available (never applied)
};

MinimizeResult minimize_complexity(const WordEngine& amb, const GeneratingSet& s, int depth,
                                   std::size_t beam, int radius = 10, int cutoff = 100,
                                   std::size_t cap = 100000);

// Least-length w with w S w^-1 = S' as sets, searched over the ball.
std::optional<Word> find_conjugator(const WordEngine& amb, const std::vector<Word>& from,
                                    const std::vector<Word>& to, int radius);

// Every spherical pair of S is conjugate into the standard generators.
bool angle_compatible(const WordEngine& amb, const GeneratingSet& s, int radius,
                      int cutoff = 100);

}  // namespace cox
