#include "doctest.h"

#include <random>

#include "cox/catalog.hpp"
#include "cox/word_engine.hpp"
#include "oracles.hpp"

using namespace cox;

namespace {

Word w(const WordEngine& eng, const char* spaced) {
  std::vector<std::string> names;
  std::string cur;
  for (const char* p = spaced;; ++p) {
    if (*p == ' ' || *p == 0) {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
      if (!*p) break;
    } else {
      cur += *p;
    }
  }
  return eng.parse(names);
}

}  // namespace

TEST_CASE("canonicalization basics on path434") {
  WordEngine eng(catalog::path434());

  CHECK(eng.reduce(w(eng, "s s")).empty());
  CHECK(eng.reduce(w(eng, "s t s t s")) == w(eng, "t"));
  // sts = tst, ShortLex prefers s < t
  CHECK(eng.reduce(w(eng, "t s t")) == w(eng, "s t s"));
  CHECK(eng.reduce(eng.reduce(w(eng, "t s t"))) == eng.reduce(w(eng, "t s t")));
  CHECK_THROWS_AS(eng.reduce(Word(1, char(9))), CoxError);
}

TEST_CASE("multiplication, inverse, conjugation") {
  WordEngine eng(catalog::path434());

  CHECK(eng.mul(w(eng, "s"), w(eng, "t")) == w(eng, "s t"));
  CHECK(WordEngine::len(eng.mul(w(eng, "s"), w(eng, "t"))) == 2);
  CHECK(eng.inv(w(eng, "s t")) == w(eng, "t s"));
  CHECK(eng.mul(w(eng, "s t s"), w(eng, "t")) == w(eng, "t s"));
  CHECK(eng.conj(w(eng, "s t s"), w(eng, "s")) == w(eng, "t"));
  CHECK(eng.conj(Word(), w(eng, "b")) == w(eng, "b"));
  CHECK(eng.conj(w(eng, "s t s"), w(eng, "b")).size() == 7);
}

TEST_CASE("product order") {
  WordEngine eng(catalog::path434());
  CHECK(eng.product_order(w(eng, "s"), w(eng, "t"), 50) == OrderResult{true, 3, 50});
  CHECK(eng.product_order(w(eng, "s"), w(eng, "b"), 50) == OrderResult{false, 0, 50});
  CHECK(eng.product_order(w(eng, "s"), w(eng, "s"), 50) == OrderResult{true, 1, 50});
  CHECK(eng.product_order(w(eng, "a"), w(eng, "s"), 50).order == 4);
}

TEST_CASE("ball enumeration") {
  WordEngine eng(catalog::path434());
  CHECK(eng.ball_size(0) == 1);
  CHECK(eng.ball_at(0).empty());
  CHECK(eng.ball_size(1) == 5);

  // a lone dihedral group: the radius-3 ball is the whole group
  DefiningGraph i23({"s", "t"});
  i23.set_label(0, 1, 3);
  WordEngine small(i23);
  CHECK(small.ball_size(3) == 6);
  CHECK(small.ball_size(5) == 6);

  // no duplicates, sorted by (length, lex)
  auto n = eng.ball_size(5);
  for (std::size_t i = 1; i < n; ++i) {
    const Word &a = eng.ball_at(i - 1), &b = eng.ball_at(i);
    CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
  }
}

TEST_CASE("parabolic enumeration matches coset enumeration orders") {
  for (const auto& inst : catalog::instances()) {
    CAPTURE(inst.name);
    const auto& g = inst.graph;
    WordEngine eng(g);
    for (GenSet j = 1; j < (GenSet{1} << g.rank()); ++j) {
      auto type = classify(g, j);
      if (!type.spherical() || type.order() > 200) continue;
      const auto& elems = eng.parabolic(j);
      CHECK(elems.size() == type.order());
      auto tc = oracle::enumerate_group(g, j);
      REQUIRE(tc.completed);
      CHECK(tc.order == elems.size());
      // max length = longest element length
      CHECK(elems.back().size() == longest_element(g, j).size());
    }
  }
}

TEST_CASE("canonical form is invariant under random braid moves") {
  std::mt19937 rng(20250809);
  for (const auto& inst : catalog::instances()) {
    CAPTURE(inst.name);
    const auto& g = inst.graph;
    WordEngine eng(g);
    std::uniform_int_distribution<int> letter(0, g.rank() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Word raw;
      int len = std::uniform_int_distribution<int>(0, 12)(rng);
      for (int i = 0; i < len; ++i) raw.push_back(static_cast<char>(letter(rng)));
      Word canon = eng.reduce(raw);
      for (int rep = 0; rep < 5; ++rep) {
        Word moved = oracle::random_braid_walk(g, raw, 8, rng);
        CHECK(eng.reduce(moved) == canon);
      }
      // inserting a square never changes the element
      int pos = std::uniform_int_distribution<int>(0, static_cast<int>(raw.size()))(rng);
      Word padded = raw;
      char x = static_cast<char>(letter(rng));
      padded.insert(padded.begin() + pos, {x, x});
      CHECK(eng.reduce(padded) == canon);
    }
  }
}

TEST_CASE("length parity and group laws on random triples") {
  std::mt19937 rng(7);
  WordEngine eng(catalog::path434());
  auto n = eng.ball_size(6);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Word& x = eng.ball_at(pick(rng));
    const Word& y = eng.ball_at(pick(rng));
    const Word& z = eng.ball_at(pick(rng));
    CHECK(eng.mul(eng.mul(x, y), z) == eng.mul(x, eng.mul(y, z)));
    CHECK(eng.mul(x, eng.inv(x)).empty());
    CHECK(eng.mul(eng.inv(x), x).empty());
    for (Gen s = 0; s < eng.graph().rank(); ++s) {
      int d = WordEngine::len(eng.mul(x, Word(1, static_cast<char>(s)))) - WordEngine::len(x);
      CHECK((d == 1 || d == -1));
    }
  }
}
