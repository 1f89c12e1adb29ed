#include "cox/folding.hpp"

#include <algorithm>

namespace cox {

DihedralElt Dihedral::normalize(DihedralElt d) const {
  if (d.len == 0) d.first = true;
  if (finite_m(m_) && d.len == m_) d.first = true;
  return d;
}

DihedralElt Dihedral::mul_right(DihedralElt d, bool by_s) const {
  if (d.len == 0) return {1, by_s};
  if (finite_m(m_) && d.len == m_) {
    // both spellings are available; shorten with the one ending in the letter
    bool first = (m_ % 2 == 1) ? by_s : !by_s;
    return normalize({m_ - 1, first});
  }
  bool last = (d.len % 2 == 1) ? d.first : !d.first;
  if (last == by_s) return normalize({d.len - 1, d.first});
  if (finite_m(m_) && d.len + 1 > m_)
    throw CoxError(Err::internal_error, "dihedral length overflow");
  return normalize({d.len + 1, d.first});
}

DihedralElt Dihedral::longest() const {
  if (!finite_m(m_)) throw CoxError(Err::invalid_subset, "infinite dihedral has no longest element");
  return {m_, true};
}

std::vector<DihedralElt> Dihedral::elements(int window) const {
  const int top = finite_m(m_) ? m_ : window;
  std::vector<DihedralElt> out{dihedral_id};
  for (int l = 1; l <= top; ++l) {
    out.push_back(normalize({l, true}));
    DihedralElt other = normalize({l, false});
    if (other != out.back()) out.push_back(other);
  }
  return out;
}

Folding::Folding(int m, int window, std::map<DihedralElt, DihedralElt> map)
    : group_(m), window_(window), map_(std::move(map)) {}

DihedralElt Folding::apply(DihedralElt d) const {
  auto it = map_.find(group_.normalize(d));
  if (it == map_.end()) throw CoxError(Err::invalid_subset, "element outside the folding domain");
  return it->second;
}

Folding Folding::standard(int m, Kind kind, int window) {
  if (kind == Kind::example3 && m != 3)
    throw CoxError(Err::invalid_subset, "the example folding lives at m = 3");
  if (finite_m(m) && kind == Kind::odd && m % 2 == 0)
    throw CoxError(Err::invalid_subset, "odd folding needs odd m");
  if (finite_m(m) && kind == Kind::even && m % 2 == 1)
    throw CoxError(Err::invalid_subset, "even folding needs even m");
  if (!finite_m(m))
    throw CoxError(Err::invalid_subset, "standard foldings are for finite dihedral groups");

  Dihedral group(m);
  std::map<DihedralElt, DihedralElt> map;
  for (DihedralElt w : group.elements(window)) {
    if (w.len <= 1) {
      map[w] = w;  // identity near the origin
    } else if (w.len >= m - 1) {
      if (kind == Kind::even) {
        map[w] = dihedral_id;
      } else {
        // w0 w for w in {w0 s, w0, w0 t}
        if (w.len == m)
          map[w] = dihedral_id;
        else  // len m-1: w = w0 x with x the missing end letter
          map[w] = (m % 2 == 1) == w.first ? dihedral_s : dihedral_t;
      }
    } else {
      map[w] = w.first ? dihedral_s : dihedral_t;  // first letter
    }
  }
  Folding f(m, window, std::move(map));
  if (!f.valid()) throw CoxError(Err::internal_error, "standard folding failed its own clauses");
  return f;
}

bool Folding::valid() const {
  for (const auto& [w, fw] : map_) {
    if (!(fw == dihedral_id || fw == dihedral_s || fw == dihedral_t)) return false;
    for (bool by_s : {true, false}) {
      DihedralElt wx = group_.mul_right(w, by_s);
      auto it = map_.find(wx);
      if (it == map_.end()) continue;  // outside the window
      DihedralElt fwx = it->second;
      if (!(fwx == fw || fwx == group_.mul_right(fw, by_s))) return false;
    }
  }
  return true;
}

bool Folding::injective_arc(DihedralElt w, DihedralElt w2) const {
  w = group_.normalize(w);
  w2 = group_.normalize(w2);
  if (w == w2) return true;

  const int m = group_.m();
  auto values_injective = [&](const std::vector<DihedralElt>& path) {
    std::vector<DihedralElt> vals;
    for (DihedralElt v : path) vals.push_back(apply(v));
    std::sort(vals.begin(), vals.end());
    return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
  };
  auto walk = [&](DihedralElt from, DihedralElt to, bool start_with_s) {
    std::vector<DihedralElt> path{from};
    DihedralElt cur = from;
    bool next_s = start_with_s;
    // walk the cycle/line one edge at a time; alternate which letter moves us
    for (int guard = 0; guard < 4 * (finite_m(m) ? m : window_) + 4; ++guard) {
      if (cur == to) return path;
      DihedralElt nxt = group_.mul_right(cur, next_s);
      if (!finite_m(m) && nxt.len > window_) return std::vector<DihedralElt>{};
      path.push_back(nxt);
      // the next edge uses the other letter exactly when the length changed
      // direction is irrelevant: edges alternate s,t along the cycle
      next_s = !next_s;
      cur = nxt;
    }
    return std::vector<DihedralElt>{};
  };

  // The Cayley graph of a dihedral group is a cycle (finite m) or a line:
  // between two vertices there are at most two simple paths, obtained by
  // leaving `w` along s or along t.
  for (bool dir : {true, false}) {
    auto path = walk(w, w2, dir);
    if (!path.empty() && values_injective(path)) return true;
  }
  return false;
}

Word dihedral_word(const Word& s_elem, const Word& t_elem, DihedralElt d) {
  Word w;
  bool use_s = d.first;
  for (int i = 0; i < d.len; ++i) {
    w += use_s ? s_elem : t_elem;
    use_s = !use_s;
  }
  return w;
}

DihedralElt locate_translate(const WordEngine& amb, int m, const Word& s_elem,
                             const Word& t_elem, const FundamentalDomain& v, const Word& c) {
  Dihedral group(m);
  const int window = finite_m(m) ? m : WordEngine::len(c) + 4;
  for (DihedralElt w : group.elements(window)) {
    Word w_amb = amb.reduce(dihedral_word(s_elem, t_elem, w));
    if (domain_contains(amb, v, amb.mul(amb.inv(w_amb), c))) return w;
  }
  throw CoxError(Err::internal_error, "chamber lies in no translate of the domain");
}

Word folded_map(const WordEngine& amb, const Folding& f, const Word& s_elem,
                const Word& t_elem, const FundamentalDomain& v, const Word& c) {
  DihedralElt w = locate_translate(amb, f.m(), s_elem, t_elem, v, c);
  DihedralElt fw = f.apply(w);
  Word w_amb = amb.reduce(dihedral_word(s_elem, t_elem, w));
  Word fw_amb = amb.reduce(dihedral_word(s_elem, t_elem, fw));
  return amb.mul(fw_amb, amb.mul(amb.inv(w_amb), c));
}

}  // namespace cox
