#include "cox/davis.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cox {

bool on_identity_side(const WordEngine& eng, const Word& c, const Word& r) {
  return WordEngine::len(eng.mul(r, c)) > WordEngine::len(c);
}

bool in_halfspace(const WordEngine& eng, const Halfspace& h, const Word& c) {
  return on_identity_side(eng, c, h.wall) == h.identity_side;
}

Reflection reflection_form(const WordEngine& eng, const Word& g) {
  const Word canon = eng.reduce(g);
  if (canon.empty() || canon.size() % 2 == 0 || !eng.mul(canon, canon).empty())
    throw CoxError(Err::not_a_reflection, "not a reflection");

  // Try the palindromic split of the canonical word first.
  const std::size_t half = canon.size() / 2;
  Word u = canon.substr(0, half);
  Gen mid = canon[half];
  if (eng.conj(u, Word(1, static_cast<char>(mid))) == canon) return {canon, u, mid};

  // Descent recursion: strip letters x with l(x g x) = l(g) - 2.
  Word prefix;
  Word cur = canon;
  while (cur.size() > 1) {
    bool found = false;
    for (Gen x = 0; x < eng.graph().rank() && !found; ++x) {
      Word next = eng.conj(Word(1, static_cast<char>(x)), cur);
      if (next.size() + 2 == cur.size()) {
        prefix.push_back(static_cast<char>(x));
        cur = std::move(next);
        found = true;
      }
    }
    if (!found) throw CoxError(Err::not_a_reflection, "involution is not a reflection");
  }
  return {canon, eng.reduce(prefix), cur[0]};
}

Halfspace halfspace_containing(const WordEngine& eng, const Word& r,
                               const std::vector<Word>& K) {
  if (K.empty()) throw CoxError(Err::invalid_word, "empty chamber set");
  bool side = on_identity_side(eng, K.front(), r);
  for (const Word& c : K)
    if (on_identity_side(eng, c, r) != side)
      throw CoxError(Err::not_separated, "chamber set meets both sides of the wall");
  return {r, side};
}

Halfspace halfspace_toward_wall(const WordEngine& eng, const Word& r, const Word& r2,
                                int cutoff) {
  if (r == r2) throw CoxError(Err::walls_intersect, "walls coincide");
  if (eng.product_order(r, r2, cutoff).finite)
    throw CoxError(Err::walls_intersect, "walls are not disjoint");
  Reflection refl = reflection_form(eng, r2);
  Word c1 = refl.prefix;
  Word c2 = eng.mul(refl.prefix, Word(1, static_cast<char>(refl.core)));
  bool side = on_identity_side(eng, c1, r);
  if (on_identity_side(eng, c2, r) != side)
    throw CoxError(Err::internal_error, "disjoint walls separated a dual edge");
  return {r, side};
}

bool incident(const WordEngine& eng, const Word& c, const Word& r) {
  return eng.conj(eng.inv(c), r).size() == 1;
}

int distance_to_wall(const WordEngine& eng, const Word& c, const Word& r) {
  const int limit = WordEngine::len(c) + WordEngine::len(r) + 1;
  std::unordered_set<Word> seen{c};
  std::vector<Word> frontier{c};
  for (int depth = 0; depth <= limit; ++depth) {
    for (const Word& x : frontier)
      if (incident(eng, x, r)) return depth;
    std::vector<Word> next;
    for (const Word& x : frontier)
      for (Gen s = 0; s < eng.graph().rank(); ++s) {
        Word y = eng.mul(x, Word(1, static_cast<char>(s)));
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  throw CoxError(Err::radius_exhausted, "distance_to_wall search exceeded its bound");
}

int gallery_distance(const WordEngine& eng, const Word& c1, const Word& c2) {
  return WordEngine::len(eng.mul(eng.inv(c1), c2));
}

int set_distance(const WordEngine& eng, const std::vector<Word>& xs,
                 const std::vector<Word>& ys) {
  if (xs.empty() || ys.empty()) throw CoxError(Err::invalid_word, "empty chamber set");
  int best = -1;
  for (const Word& x : xs) {
    const Word xi = eng.inv(x);
    for (const Word& y : ys) {
      int d = WordEngine::len(eng.mul(xi, y));
      if (best < 0 || d < best) best = d;
      if (best == 0) return 0;
    }
  }
  return best;
}

namespace {

// Union of the supports of c^-1 l c over l in L, or -1u when some conjugate
// leaves every spherical subset.
GenSet conjugate_support(const WordEngine& eng, const std::vector<Word>& L, const Word& c) {
  GenSet support = 0;
  const Word ci = eng.inv(c);
  for (const Word& l : L) {
    Word conj = eng.mul(eng.mul(ci, l), c);
    for (char x : conj) support |= single(x);
  }
  return support;
}

Word shortest_coset_rep(const WordEngine& eng, const Word& c, GenSet type) {
  Word best = c;
  for (const Word& v : eng.parabolic(type)) {
    Word cand = eng.mul(c, v);
    if (cand.size() < best.size() || (cand.size() == best.size() && cand < best)) best = cand;
  }
  return best;
}

}  // namespace

Residue cell_of(const WordEngine& eng, const std::vector<Word>& L, int radius) {
  if (L.empty()) throw CoxError(Err::invalid_subset, "cell of empty set");
  for (int r = 0; r <= radius; ++r) {
    const std::size_t lo = r == 0 ? 0 : eng.ball_size(r - 1);
    const std::size_t hi = eng.ball_size(r);
    for (std::size_t i = lo; i < hi; ++i) {
      const Word& c = eng.ball_at(i);
      GenSet support = conjugate_support(eng, L, c);
      if (is_spherical(eng.graph(), support))
        return {shortest_coset_rep(eng, c, support), support};
    }
  }
  throw CoxError(Err::radius_exhausted, "no fixed cell within the search radius");
}

Residue fixed_maximal_cell(const WordEngine& eng, const std::vector<Word>& L, int radius) {
  Residue cell = cell_of(eng, L, radius);
  const DefiningGraph& g = eng.graph();
  for (bool grew = true; grew;) {
    grew = false;
    for (Gen s = 0; s < g.rank(); ++s) {
      if (contains(cell.type, s)) continue;
      if (is_spherical(g, cell.type | single(s))) {
        cell.type |= single(s);
        grew = true;
        break;
      }
    }
  }
  cell.anchor = shortest_coset_rep(eng, cell.anchor, cell.type);
  return cell;
}

std::vector<Word> residue_chambers(const WordEngine& eng, const Residue& r) {
  std::vector<Word> out;
  for (const Word& v : eng.parabolic(r.type)) out.push_back(eng.mul(r.anchor, v));
  return out;
}

std::vector<Word> frame_chambers(const WordEngine& eng, const Residue& cell,
                                 const std::vector<Word>& L) {
  std::vector<Word> out;
  for (const Word& c : residue_chambers(eng, cell)) {
    bool all = true;
    for (const Word& l : L)
      if (!incident(eng, c, eng.reduce(l))) { all = false; break; }
    if (all) out.push_back(c);
  }
  return out;
}

std::pair<FundamentalDomain, FundamentalDomain> geometric_domains(const WordEngine& eng,
                                                                  const std::vector<Word>& L,
                                                                  int radius) {
  Residue cell = cell_of(eng, L, radius);
  if (size_of(cell.type) != static_cast<int>(L.size()))
    throw CoxError(Err::internal_error, "cell type does not match the rank of L");
  auto frames = frame_chambers(eng, cell, L);
  if (frames.size() != 2)
    throw CoxError(Err::internal_error, "irreducible L must have exactly two frame chambers");

  auto make = [&](const Word& rep) {
    FundamentalDomain d;
    d.representative = rep;
    for (const Word& l : L) {
      Word wall = eng.reduce(l);
      d.sides.push_back({wall, on_identity_side(eng, rep, wall)});
    }
    return d;
  };
  // frames is ordered by the parabolic BFS order; keep ShortLex-least first
  if (!(frames[0].size() < frames[1].size() ||
        (frames[0].size() == frames[1].size() && frames[0] < frames[1])))
    std::swap(frames[0], frames[1]);
  return {make(frames[0]), make(frames[1])};
}

bool domain_contains(const WordEngine& eng, const FundamentalDomain& d, const Word& c) {
  for (const Halfspace& h : d.sides)
    if (!in_halfspace(eng, h, c)) return false;
  return true;
}

bool is_geometric_pair(const WordEngine& eng, const Halfspace& h1, const Halfspace& h2,
                       int radius, int cutoff) {
  if (h1.wall == h2.wall)
    throw CoxError(Err::invalid_subset, "geometric pair test needs two distinct walls");

  // <r1, r2> as a set of canonical words; infinite pairs have no complete
  // orbit in any ball.
  std::vector<Word> group{Word()};
  if (eng.product_order(h1.wall, h2.wall, cutoff).finite) {
    std::unordered_set<Word> seen{Word()};
    for (std::size_t i = 0; i < group.size(); ++i)
      for (const Word* r : {&h1.wall, &h2.wall}) {
        Word g = eng.mul(group[i], *r);
        if (seen.insert(g).second) group.push_back(std::move(g));
      }
  }

  bool saw_complete_orbit = false;
  std::unordered_set<Word> done;
  const std::size_t n = eng.ball_size(radius);
  for (std::size_t i = 0; i < n; ++i) {
    const Word& c = eng.ball_at(i);
    if (group.size() == 1 || done.contains(c)) continue;
    std::vector<Word> orbit;
    bool complete = true;
    for (const Word& g : group) {
      Word x = eng.mul(g, c);
      if (WordEngine::len(x) > radius) complete = false;
      orbit.push_back(std::move(x));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (!complete) {
      for (const Word& x : orbit)
        if (WordEngine::len(x) <= radius) done.insert(x);
      continue;
    }
    saw_complete_orbit = true;
    int hits = 0;
    for (const Word& x : orbit) {
      if (in_halfspace(eng, h1, x) && in_halfspace(eng, h2, x)) ++hits;
      done.insert(x);
    }
    if (hits != 1) return false;
  }
  if (!saw_complete_orbit)
    throw CoxError(Err::inconclusive_radius, "no complete orbit inside the ball");
  return true;
}

std::vector<Word> subgroup_reflections(const WordEngine& eng, const Residue& cell) {
  std::vector<Word> out;
  for (const Word& r : eng.parabolic_reflections(cell.type)) out.push_back(eng.conj(cell.anchor, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word sector_of(const WordEngine& eng, const std::vector<Word>& L, const Word& c, int radius) {
  Residue cell = cell_of(eng, L, radius);
  auto domains = geometric_domains(eng, L, radius);
  auto walls = subgroup_reflections(eng, cell);

  auto signs = [&](const Word& x) {
    std::vector<bool> v;
    v.reserve(walls.size());
    for (const Word& w : walls) v.push_back(on_identity_side(eng, x, w));
    return v;
  };
  auto target = signs(c);
  const Word anchor_inv = eng.inv(cell.anchor);
  for (const Word& v : eng.parabolic(cell.type)) {
    Word g = eng.mul(eng.mul(cell.anchor, v), anchor_inv);
    if (signs(eng.mul(g, domains.first.representative)) == target) return v;
  }
  throw CoxError(Err::internal_error, "chamber matched no sector of L");
}

}  // namespace cox
