#include <algorithm>
#include <map>
#include <unordered_set>

#include "cox/twist.hpp"

namespace cox {

namespace {

std::string set_key(const GeneratingSet& s) {
  std::vector<Word> elems = s.elements;
  std::sort(elems.begin(), elems.end());
  std::string key;
  for (const Word& e : elems) {
    key += e;
    key += static_cast<char>(127);
  }
  return key;
}

std::string twist_key(const ElementaryTwist& t) {
  return std::to_string(t.j) + ":" + std::to_string(t.b);
}

}  // namespace

MinimizeResult minimize_complexity(const WordEngine& amb, const GeneratingSet& s, int depth,
                                   std::size_t beam, int radius, int cutoff, std::size_t cap) {
  struct Node {
    GeneratingSet set;
    std::vector<ElementaryTwist> seq;
    ComplexityValue val;
    std::string key;
  };
  auto eval = [&](const GeneratingSet& gs) {
    MarkedSet ms(amb, gs);
    return complexity(ms, radius, cutoff);
  };

  MinimizeResult res;
  Node root{s, {}, eval(s), set_key(s)};
  res.best = root.set;
  res.value = root.val;

  std::unordered_set<std::string> seen{root.key};
  std::vector<Node> level{std::move(root)};
  const ComplexityValue zero{};

  for (int d = 0; d < depth && res.value != zero && !level.empty(); ++d) {
    std::vector<Node> next;
    for (const Node& node : level) {
      auto twists = enumerate_twists(node.set.graph);
      std::sort(twists.begin(), twists.end(),
                [](const ElementaryTwist& x, const ElementaryTwist& y) {
                  return twist_key(x) < twist_key(y);
                });
      for (const ElementaryTwist& t : twists) {
        if (size_of(t.j) >= 3) {
          res.saw_large_twist = true;  // detected, never applied
          continue;
        }
        GeneratingSet child = apply_twist_generators(amb, node.set, t);
        std::string key = set_key(child);
        if (!seen.insert(key).second) continue;
        if (seen.size() > cap) {
          res.exhaustive = false;
          break;
        }
        Node cn;
        cn.set = std::move(child);
        cn.seq = node.seq;
        cn.seq.push_back(t);
        cn.key = std::move(key);
        try {
          cn.val = eval(cn.set);
        } catch (const CoxError& e) {
          // a child too twisted for the search radius is pruned, not fatal
          if (e.code() == Err::radius_exhausted || e.code() == Err::cap_exhausted) {
            res.exhaustive = false;
            continue;
          }
          throw;
        }
        if (cn.val < res.value || (cn.val == res.value && cn.key < set_key(res.best))) {
          res.best = cn.set;
          res.value = cn.val;
          res.sequence = cn.seq;
        }
        next.push_back(std::move(cn));
      }
    }
    if (beam > 0 && next.size() > beam) {
      std::sort(next.begin(), next.end(),
                [](const Node& a, const Node& b) { return std::tie(a.val, a.key) < std::tie(b.val, b.key); });
      next.resize(beam);
      res.exhaustive = false;
    }
    if (d + 1 == depth && !next.empty()) res.exhaustive = false;
    level = std::move(next);
  }
  return res;
}

std::optional<Word> find_conjugator(const WordEngine& amb, const std::vector<Word>& from,
                                    const std::vector<Word>& to, int radius) {
  std::vector<Word> target = to;
  std::sort(target.begin(), target.end());
  const std::size_t n = amb.ball_size(radius);
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = amb.ball_at(i);
    std::vector<Word> image;
    for (const Word& x : from) image.push_back(amb.conj(w, x));
    std::sort(image.begin(), image.end());
    if (image == target) return w;
  }
  return std::nullopt;
}

bool angle_compatible(const WordEngine& amb, const GeneratingSet& s, int radius, int cutoff) {
  const DefiningGraph& ambient_graph = amb.graph();
  for (Gen a = 0; a < s.graph.rank(); ++a)
    for (Gen b = a + 1; b < s.graph.rank(); ++b) {
      int m = s.graph.label(a, b);
      if (!finite_m(m)) continue;
      // impossible when no standard pair carries this label
      bool label_exists = false;
      for (Gen x = 0; x < ambient_graph.rank() && !label_exists; ++x)
        for (Gen y = x + 1; y < ambient_graph.rank(); ++y)
          if (ambient_graph.label(x, y) == m) { label_exists = true; break; }
      if (!label_exists) return false;

      bool found = false;
      const std::size_t n = amb.ball_size(radius);
      for (std::size_t i = 0; i < n && !found; ++i) {
        const Word& w = amb.ball_at(i);
        found = amb.conj(w, s.elements[a]).size() == 1 && amb.conj(w, s.elements[b]).size() == 1;
      }
      if (!found)
        throw CoxError(Err::inconclusive_radius, "pair not conjugated into S' within the radius");
      (void)cutoff;
    }
  return true;
}

}  // namespace cox
