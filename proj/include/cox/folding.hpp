#pragma once

#include <map>

#include "cox/davis.hpp"

namespace cox {

// Element of a dihedral group <s,t>: the alternating word of length `len`
// whose first letter is s (first = true) or t. len 0 is the identity; for
// finite m the longest element (len = m) is normalized to first = true.
struct DihedralElt {
  int len = 0;
  bool first = true;
  auto operator<=>(const DihedralElt&) const = default;
};

inline const DihedralElt dihedral_id{0, true};
inline const DihedralElt dihedral_s{1, true};
inline const DihedralElt dihedral_t{1, false};

class Dihedral {
 public:
  explicit Dihedral(int m) : m_(m) {}
  int m() const { return m_; }
  DihedralElt normalize(DihedralElt d) const;
  DihedralElt mul_right(DihedralElt d, bool by_s) const;
  DihedralElt longest() const;  // finite m only
  // All elements with len <= min(m, window); window ignored for finite m.
  std::vector<DihedralElt> elements(int window) const;

 private:
  int m_;
};

// Simplicial type-preserving map <s,t> -> {s, Id, t}.
class Folding {
 public:
  enum class Kind { odd, even, example3 };

  // The foldings used in the descent arguments: identity near the origin,
  // w_st-reflection (odd) or collapse to Id (even) on the far triple, first
  // letter elsewhere. example3 is the odd folding at m = 3.
  static Folding standard(int m, Kind kind, int window = 12);

  Folding(int m, int window, std::map<DihedralElt, DihedralElt> map);

  int m() const { return group_.m(); }
  int window() const { return window_; }
  const Dihedral& group() const { return group_; }
  DihedralElt apply(DihedralElt d) const;

  // Both folding clauses over the (windowed) domain.
  bool valid() const;

  // Distance is preserved between chambers of wV and w'V exactly when f is
  // injective along some path from w to w' in the dihedral Cayley graph.
  bool injective_arc(DihedralElt w, DihedralElt w2) const;

 private:
  Dihedral group_;
  int window_;
  std::map<DihedralElt, DihedralElt> map_;
};

Word dihedral_word(const Word& s_elem, const Word& t_elem, DihedralElt d);

// The translate w in <s,t> with c in wV.
DihedralElt locate_translate(const WordEngine& amb, int m, const Word& s_elem,
                             const Word& t_elem, const FundamentalDomain& v, const Word& c);

// f~(c) = f(w) w^-1 c for c in wV.
Word folded_map(const WordEngine& amb, const Folding& f, const Word& s_elem,
                const Word& t_elem, const FundamentalDomain& v, const Word& c);

}  // namespace cox
