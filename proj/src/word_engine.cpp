#include "cox/word_engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>

namespace cox {

namespace {

// Deletes adjacent equal letters until none remain (letters are involutions).
Word strip_squares(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

}  // namespace

void WordEngine::validate(const Word& raw) const {
  for (char c : raw)
    if (c < 0 || c >= graph_.rank())
      throw CoxError(Err::invalid_word, "unknown letter in word");
}

Word WordEngine::parse(const std::vector<std::string>& names) const {
  Word w;
  for (const auto& n : names) {
    Gen g = graph_.index_of(n);
    if (g < 0) throw CoxError(Err::invalid_word, "unknown generator '" + n + "'");
    w.push_back(static_cast<char>(g));
  }
  return w;
}

std::string WordEngine::spell(const Word& w) const {
  if (w.empty()) return "e";
  std::string s;
  for (char c : w) {
    if (!s.empty()) s += ' ';
    s += graph_.name(c);
  }
  return s;
}

// Tits rewriting. Invariant of the search: every enqueued word has no adjacent
// equal pair, so after a braid replacement new squares can only appear at the
// two seams of the replaced factor.
Word WordEngine::reduce(const Word& raw) const {
  validate(raw);
  if (auto it = memo_.find(raw); it != memo_.end()) return it->second;

  Word w = strip_squares(raw);
  std::vector<Word> aliases;
  aliases.push_back(raw);

  for (;;) {
    if (auto it = memo_.find(w); it != memo_.end()) {
      Word result = it->second;
      for (auto& v : aliases) memo_.emplace(std::move(v), result);
      return result;
    }

    std::unordered_set<Word> visited{w};
    std::deque<Word> queue{w};
    std::optional<Word> shortened;
    std::optional<Word> known;

    while (!queue.empty() && !shortened && !known) {
      Word x = std::move(queue.front());
      queue.pop_front();
      const int n = static_cast<int>(x.size());
      for (int i = 0; i + 1 < n && !shortened && !known; ++i) {
        const char a = x[i], b = x[i + 1];
        const int m = graph_.label(a, b);
        if (!finite_m(m) || i + m > n) continue;
        bool alternates = true;
        for (int k = 2; k < m; ++k)
          if (x[i + k] != (k % 2 ? b : a)) { alternates = false; break; }
        if (!alternates) continue;

        Word y = x;
        for (int k = 0; k < m; ++k) y[i + k] = (k % 2 ? a : b);
        if ((i > 0 && y[i - 1] == y[i]) || (i + m < n && y[i + m - 1] == y[i + m])) {
          shortened = strip_squares(y);
          break;
        }
        if (!visited.contains(y)) {
          if (auto it = memo_.find(y); it != memo_.end()) {
            known = it->second;
            break;
          }
          if (visited.size() > closure_budget_)
            throw CoxError(Err::cap_exhausted, "braid closure budget exceeded");
          visited.insert(y);
          queue.push_back(std::move(y));
        }
      }
    }

    // Very large closures are not worth caching member-by-member.
    const bool cache_members = visited.size() <= 64;

    if (known) {
      if (cache_members)
        while (!visited.empty())
          memo_.emplace(std::move(visited.extract(visited.begin()).value()), *known);
      for (auto& v : aliases) memo_.emplace(std::move(v), *known);
      return *known;
    }
    if (shortened) {
      if (cache_members)
        while (!visited.empty())
          aliases.push_back(std::move(visited.extract(visited.begin()).value()));
      w = std::move(*shortened);
      continue;
    }

    // Closure exhausted: w is reduced and `visited` is its full braid class.
    Word best = *std::min_element(visited.begin(), visited.end());
    if (cache_members)
      while (!visited.empty())
        memo_.emplace(std::move(visited.extract(visited.begin()).value()), best);
    else
      memo_.emplace(w, best);
    for (auto& v : aliases) memo_.emplace(std::move(v), best);
    return best;
  }
}

OrderResult WordEngine::product_order(const Word& x, const Word& y, int cutoff) const {
  if (cutoff < 1) throw CoxError(Err::invalid_word, "cutoff must be >= 1");
  const Word p = mul(x, y);
  const Word key = p + static_cast<char>(127) + static_cast<char>(cutoff & 0x7f);
  if (auto it = order_cache_.find(key); it != order_cache_.end()) return it->second;
  OrderResult res = order_of_power(p, cutoff);
  order_cache_[key] = res;
  return res;
}

// Least k <= cutoff with p^k = 1. Iterating powers of the raw word is
// explosive when p is a product of conjugated generators (each power stacks
// braid-rich factors), so p is first minimized over its conjugacy class by a
// bounded single-letter conjugation walk. A conjugate whose support is
// spherical certifies finite order and hands the computation to a finite
// parabolic; otherwise the minimal conjugate is iterated under a length
// guard, and running past the guard means no k <= cutoff closes the power.
OrderResult WordEngine::order_of_power(const Word& raw_p, int cutoff) const {
  Word p = reduce(raw_p);
  if (p.empty()) return {true, 1, cutoff};

  auto spherical_support = [&](const Word& q) {
    GenSet s = 0;
    for (char ch : q) s |= single(ch);
    return is_spherical(graph_, s);
  };

  std::optional<Word> elliptic;
  Word best = p;
  if (spherical_support(p)) {
    elliptic = p;
  } else {
    std::unordered_set<Word> seen{p};
    std::deque<Word> queue{p};
    while (!queue.empty() && !elliptic && seen.size() < 5000) {
      Word cur = std::move(queue.front());
      queue.pop_front();
      for (Gen g = 0; g < graph_.rank() && !elliptic; ++g) {
        Word nxt = conj(Word(1, static_cast<char>(g)), cur);
        if (nxt.size() > best.size() + 6) continue;
        if (!seen.insert(nxt).second) continue;
        if (nxt.size() < best.size()) best = nxt;
        if (spherical_support(nxt))
          elliptic = std::move(nxt);
        else
          queue.push_back(std::move(nxt));
      }
    }
  }

  // Power iteration on the minimal conjugate. Without an elliptic
  // certificate the iteration is fenced twice: by a length guard and by a
  // rewriting budget (powers of infinite-order words can have braid classes
  // far beyond the canonicalizer); running into either fence means no
  // k <= cutoff was exhibited, which is the InfiniteAtCutoff verdict.
  const Word& q = elliptic ? *elliptic : best;
  const int guard = elliptic ? std::numeric_limits<int>::max()
                             : 2 * static_cast<int>(q.size()) + 8;
  const std::size_t saved_budget = closure_budget_;
  if (!elliptic) closure_budget_ = 200000;
  Word acc = q;
  for (int k = 1; k <= cutoff; ++k) {
    if (acc.empty()) return {true, k, cutoff};
    if (WordEngine::len(acc) > guard) break;
    try {
      acc = mul(acc, q);
    } catch (const CoxError& e) {
      closure_budget_ = saved_budget;
      if (e.code() == Err::cap_exhausted && !elliptic) return {false, 0, cutoff};
      throw;
    }
  }
  closure_budget_ = saved_budget;
  return {false, 0, cutoff};
}

std::size_t WordEngine::ball_size(int radius) const {
  if (radius < 0) throw CoxError(Err::invalid_word, "radius must be >= 0");
  if (layer_end_.empty()) {
    ball_.push_back(Word());
    layer_end_.push_back(1);
  }
  while (static_cast<int>(layer_end_.size()) <= radius) {
    const std::size_t lo = layer_end_.size() < 2 ? 0 : layer_end_[layer_end_.size() - 2];
    const std::size_t hi = layer_end_.back();
    const int next_len = static_cast<int>(layer_end_.size());
    std::vector<Word> next;
    std::unordered_set<Word> seen;
    for (std::size_t i = lo; i < hi; ++i)
      for (Gen s = 0; s < graph_.rank(); ++s) {
        Word c = mul(ball_[i], Word(1, static_cast<char>(s)));
        if (len(c) == next_len && seen.insert(c).second) next.push_back(std::move(c));
      }
    std::sort(next.begin(), next.end());
    if (ball_.size() + next.size() > ball_cap_)
      throw CoxError(Err::radius_exhausted, "ball cap exceeded");
    for (auto& c : next) ball_.push_back(std::move(c));
    layer_end_.push_back(ball_.size());
  }
  return layer_end_[radius];
}

const std::vector<Word>& WordEngine::parabolic(GenSet mask, std::size_t cap) const {
  check_subset(graph_, mask);
  if (auto it = parabolic_.find(mask); it != parabolic_.end()) return it->second;
  std::vector<Word> elems{Word()};
  std::unordered_set<Word> seen{Word()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Gen s : members(mask)) {
      Word c = mul(elems[i], Word(1, static_cast<char>(s)));
      if (seen.insert(c).second) {
        if (elems.size() >= cap)
          throw CoxError(Err::cap_exhausted, "parabolic enumeration cap exceeded");
        elems.push_back(std::move(c));
      }
    }
  }
  std::sort(elems.begin(), elems.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return parabolic_[mask] = std::move(elems);
}

const std::vector<Word>& WordEngine::parabolic_reflections(GenSet mask) const {
  if (auto it = parabolic_refl_.find(mask); it != parabolic_refl_.end()) return it->second;
  std::unordered_set<Word> set;
  for (const Word& v : parabolic(mask))
    for (Gen s : members(mask)) set.insert(conj(v, Word(1, static_cast<char>(s))));
  std::vector<Word> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return parabolic_refl_[mask] = std::move(out);
}

}  // namespace cox
