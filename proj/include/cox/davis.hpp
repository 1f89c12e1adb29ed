#pragma once

#include <vector>

#include "cox/word_engine.hpp"

namespace cox {

// A reflection u s u^-1 with its canonical split.
struct Reflection {
  Word element;  // canonical word, length 2|prefix|+1
  Word prefix;   // u
  Gen core;      // s
};

// One side of a wall; the wall is the canonical word of its reflection.
struct Halfspace {
  Word wall;
  bool identity_side = true;
  auto operator<=>(const Halfspace&) const = default;
  Halfspace opposite() const { return {wall, !identity_side}; }
};

// Coset anchor.<type>: chambers of one cell of the ambient complex.
struct Residue {
  Word anchor;  // shortest element of its coset
  GenSet type;
};

// Intersection of one halfspace per wall of L, with a frame chamber inside.
struct FundamentalDomain {
  std::vector<Halfspace> sides;  // aligned with the L passed to geometric_domains
  Word representative;
};

// True iff chamber c lies on the identity side of the wall of reflection r,
// i.e. l(r c) > l(c).
bool on_identity_side(const WordEngine& eng, const Word& c, const Word& r);

bool in_halfspace(const WordEngine& eng, const Halfspace& h, const Word& c);

// Canonical (u, s) split; throws not_a_reflection.
Reflection reflection_form(const WordEngine& eng, const Word& g);

// The halfspace of wall r containing every chamber of K (not_separated if K
// meets both sides).
Halfspace halfspace_containing(const WordEngine& eng, const Word& r,
                               const std::vector<Word>& K);

// The halfspace of wall r containing the disjoint wall of r2 (walls_intersect
// if product_order(r, r2) is finite or the walls coincide).
Halfspace halfspace_toward_wall(const WordEngine& eng, const Word& r, const Word& r2,
                                int cutoff = 100);

// c is an endpoint of an edge dual to the wall of r.
bool incident(const WordEngine& eng, const Word& c, const Word& r);

// Minimal gallery distance from c to a chamber incident to the wall of r.
int distance_to_wall(const WordEngine& eng, const Word& c, const Word& r);

int gallery_distance(const WordEngine& eng, const Word& c1, const Word& c2);
int set_distance(const WordEngine& eng, const std::vector<Word>& xs,
                 const std::vector<Word>& ys);

// First chamber (BFS order) conjugating every element of L into a common
// spherical subset of the standard generators; the residue type is that
// support union and the anchor is normalized to the shortest coset
// representative. Throws radius_exhausted.
Residue cell_of(const WordEngine& eng, const std::vector<Word>& L, int radius);

// cell_of with the type extended to a maximal spherical subset (the unique
// maximal cell stabilized by <L> when L is maximal spherical).
Residue fixed_maximal_cell(const WordEngine& eng, const std::vector<Word>& L, int radius);

std::vector<Word> residue_chambers(const WordEngine& eng, const Residue& r);

// Chambers of the cell incident to every wall of L (the D-set).
std::vector<Word> frame_chambers(const WordEngine& eng, const Residue& cell,
                                 const std::vector<Word>& L);

// The two geometric fundamental domains of an irreducible spherical L,
// ordered by ShortLex representative.
std::pair<FundamentalDomain, FundamentalDomain> geometric_domains(const WordEngine& eng,
                                                                  const std::vector<Word>& L,
                                                                  int radius);

bool domain_contains(const WordEngine& eng, const FundamentalDomain& d, const Word& c);

// Orbit test on <r1,r2>-orbits fully contained in the ball: every complete
// orbit meets h1 n h2 exactly once. inconclusive_radius when no complete
// orbit exists in the ball.
bool is_geometric_pair(const WordEngine& eng, const Halfspace& h1, const Halfspace& h2,
                       int radius, int cutoff = 100);

// Sector id of chamber c for L: the unique v in the parabolic <type> with c
// in (anchor v anchor^-1) . (sector of the first geometric domain).
Word sector_of(const WordEngine& eng, const std::vector<Word>& L, const Word& c, int radius);

// Canonical reflection words of the conjugated parabolic <L> = anchor <type> anchor^-1.
std::vector<Word> subgroup_reflections(const WordEngine& eng, const Residue& cell);

}  // namespace cox
