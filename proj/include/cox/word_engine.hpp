#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cox/classify.hpp"
#include "cox/defining_graph.hpp"

namespace cox {

// Verdict of product_order: least k <= cutoff with (xy)^k = 1, or infinite
// as far as the cutoff can tell.
struct OrderResult {
  bool finite = false;
  int order = 0;
  int cutoff = 0;
  bool operator==(const OrderResult&) const = default;
};

// Exact word problem for one Coxeter system, by memoized Tits rewriting:
// braid-move closure with deletion of adjacent equal letters. Canonical forms
// are ShortLex-least reduced words (letter order = generator order).
//
// Not thread-safe; confine an engine to one worker. Results are deterministic.
class WordEngine {
 public:
  explicit WordEngine(DefiningGraph g) : graph_(std::move(g)) {}
  WordEngine(const WordEngine&) = delete;
  WordEngine& operator=(const WordEngine&) = delete;

  const DefiningGraph& graph() const { return graph_; }

  // Canonical reduced word of the element spelled by `raw`. Idempotent.
  Word reduce(const Word& raw) const;

  Word mul(const Word& x, const Word& y) const { return reduce(x + y); }
  Word inv(const Word& x) const { return reduce(Word(x.rbegin(), x.rend())); }
  // w x w^-1
  Word conj(const Word& w, const Word& x) const {
    return reduce(w + x + Word(w.rbegin(), w.rend()));
  }
  static int len(const Word& canonical) { return static_cast<int>(canonical.size()); }

  OrderResult product_order(const Word& x, const Word& y, int cutoff) const;

  // Cayley ball enumeration in BFS order (by length, ShortLex within a
  // layer). Indices are stable across calls; iterate i < ball_size(r).
  std::size_t ball_size(int radius) const;
  const Word& ball_at(std::size_t i) const { return ball_[i]; }

  // Elements of the standard parabolic on `mask`, BFS order.
  const std::vector<Word>& parabolic(GenSet mask, std::size_t cap = 1u << 21) const;

  // Canonical reflection words { v x v^-1 : v in <mask>, x in mask }.
  const std::vector<Word>& parabolic_reflections(GenSet mask) const;

  void validate(const Word& raw) const;
  Word parse(const std::vector<std::string>& names) const;
  std::string spell(const Word& w) const;  // space-separated generator names

  std::size_t memo_size() const { return memo_.size(); }

 private:
  OrderResult order_of_power(const Word& raw_p, int cutoff) const;

  DefiningGraph graph_;
  mutable std::unordered_map<Word, Word> memo_;
  mutable std::unordered_map<Word, OrderResult> order_cache_;
  mutable std::vector<Word> ball_;              // concatenated layers
  mutable std::vector<std::size_t> layer_end_;  // ball_[0 .. layer_end_[r]) = radius-r ball
  mutable std::unordered_map<GenSet, std::vector<Word>> parabolic_;
  mutable std::unordered_map<GenSet, std::vector<Word>> parabolic_refl_;
  mutable std::size_t closure_budget_ = 4u << 20;
  std::size_t ball_cap_ = 2u << 20;
};

}  // namespace cox
