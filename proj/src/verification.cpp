#include "cox/verification.hpp"

#include "cox/catalog.hpp"
#include <algorithm>
#include "cox/folding.hpp"
#include "cox/roots_f4.hpp"
#include "cox/twist.hpp"

namespace cox {

namespace {

const std::vector<std::string>& marking_instances() {
  static const std::vector<std::string> names = {"path434", "path444", "path353", "a3tail"};
  return names;
}

}  // namespace

CheckReport check_f4_roots() {
  auto rep = verify_f4_roots();
  return {rep.ok, rep.lines};
}

CheckReport check_move_invariance(int cutoff) {
  CheckReport rep;
  rep.pass = true;
  for (const auto& inst : catalog::instances()) {
    if (std::find(marking_instances().begin(), marking_instances().end(), inst.name) ==
        marking_instances().end())
      continue;
    WordEngine amb(inst.graph);
    MarkedSet ms(amb, standard_set(inst.graph));
    std::size_t markings = 0, edges = 0, broken = 0;
    for (const Marking& mu : all_markings(ms)) {
      ++markings;
      Halfspace h = marking_halfspace(ms, mu, cutoff);
      for (const Marking& nu : move_neighbors(ms, mu)) {
        ++edges;
        if (!(marking_halfspace(ms, nu, cutoff) == h)) ++broken;
      }
    }
    rep.pass = rep.pass && broken == 0;
    rep.lines.push_back(inst.name + ": " + std::to_string(markings) + " markings, " +
                        std::to_string(edges) + " move edges, " + std::to_string(broken) +
                        " halfspace changes");
  }
  return rep;
}

CheckReport check_fold_lemma(int ball_radius) {
  CheckReport rep;
  rep.pass = true;
  for (const auto& name : {"path434", "path444", "path353"}) {
    const DefiningGraph* g = nullptr;
    for (const auto& inst : catalog::instances())
      if (inst.name == name) g = &inst.graph;
    WordEngine amb(*g);
    Gen s = 1, t = 2;
    int m = g->label(s, t);
    Word se(1, static_cast<char>(s)), te(1, static_cast<char>(t));
    auto [v, v2] = geometric_domains(amb, {se, te}, 10);
    auto f = Folding::standard(m, m % 2 ? Folding::Kind::odd : Folding::Kind::even);

    const std::size_t n = amb.ball_size(ball_radius);
    std::vector<Word> image(n);
    std::vector<DihedralElt> where(n);
    for (std::size_t i = 0; i < n; ++i) {
      where[i] = locate_translate(amb, m, se, te, v, amb.ball_at(i));
      image[i] = folded_map(amb, f, se, te, v, amb.ball_at(i));
    }
    std::size_t pairs = 0, grew = 0, wrong_equality = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i; k < n; ++k) {
        ++pairs;
        int before = gallery_distance(amb, amb.ball_at(i), amb.ball_at(k));
        int after = gallery_distance(amb, image[i], image[k]);
        if (after > before) ++grew;
        if ((after == before) != f.injective_arc(where[i], where[k])) ++wrong_equality;
      }
    rep.pass = rep.pass && grew == 0 && wrong_equality == 0;
    rep.lines.push_back(std::string(name) + ": m=" + std::to_string(m) + ", " +
                        std::to_string(pairs) + " chamber pairs, " + std::to_string(grew) +
                        " grew, " + std::to_string(wrong_equality) + " equality mismatches");
  }
  return rep;
}

CheckReport check_exposed_preserved() {
  CheckReport rep;
  rep.pass = true;
  for (const auto& inst : catalog::instances()) {
    if (!inst.pipeline) continue;
    WordEngine amb(inst.graph);
    std::size_t checked = 0, broken = 0;
    for (const ElementaryTwist& t : enumerate_twists(inst.graph)) {
      auto gens = apply_twist_generators(amb, standard_set(inst.graph), t);
      for (GenSet L : maximal_spherical_subsets(inst.graph))
        for (GenSet Li : dynkin_components(inst.graph, L)) {
          if (size_of(Li) != 3 || !is_exposed(inst.graph, Li)) continue;
          GenSet li_tau = subset_of(L, t.a | t.j | perp(inst.graph, t.j))
                              ? Li
                              : twisted_subset(inst.graph, Li, t);
          ++checked;
          if (!is_exposed(gens.graph, li_tau)) ++broken;
        }
    }
    rep.pass = rep.pass && broken == 0;
    if (checked)
      rep.lines.push_back(inst.name + ": " + std::to_string(checked) +
                          " exposed triples under twists, " + std::to_string(broken) + " lost");
  }
  if (rep.lines.empty()) {
    rep.pass = false;
    rep.lines.push_back("no instance exercised the exposedness check");
  }
  return rep;
}

CheckReport check_doubles(int radius, int cutoff) {
  CheckReport rep;
  rep.pass = true;
  for (const auto& name : {"path434", "path444", "path353", "a3tail"}) {
    for (const auto& inst : catalog::instances()) {
      if (inst.name != name) continue;
      WordEngine amb(inst.graph);
      MarkedSet ms(amb, standard_set(inst.graph));
      bool ok = has_consistent_doubles(ms, radius, cutoff);
      rep.pass = rep.pass && ok;
      rep.lines.push_back(std::string(name) + ": standard set " +
                          (ok ? "has consistent doubles" : "is INCONSISTENT"));
    }
  }

  // the twisted path434 set: inconsistent, peripheral {s,t}, descending twist
  auto q3 = catalog::path434();
  WordEngine amb(q3);
  ElementaryTwist tw{single(1) | single(2), single(0), single(3)};
  MarkedSet twisted(amb, apply_twist_generators(amb, standard_set(q3), tw));
  bool inconsistent = !doubles_consistent(twisted, 1, 2, radius, cutoff);
  auto peripheral = peripheral_doubles(twisted, radius, cutoff);
  bool peripheral_ok = peripheral.size() == 1 && peripheral[0] == std::pair<Gen, Gen>{1, 2};
  bool descends = false;
  if (inconsistent) {
    auto back = partition_twist(twisted, 1, 2, {}, cutoff);
    MarkedSet restored(amb, apply_twist_generators(amb, twisted.set(), back));
    descends = complexity(restored, radius, cutoff) < complexity(twisted, radius, cutoff);
  }
  rep.pass = rep.pass && inconsistent && peripheral_ok && descends;
  rep.lines.push_back(std::string("twisted path434: double {s,t} ") +
                      (inconsistent ? "inconsistent" : "CONSISTENT") + ", peripheral set " +
                      (peripheral_ok ? "= {{s,t}}" : "unexpected") + ", partition twist " +
                      (descends ? "strictly decreases complexity" : "DOES NOT descend"));
  return rep;
}

CheckReport run_named_check(const std::string& name, int radius, int cutoff) {
  if (name == "f4-roots") return check_f4_roots();
  if (name == "move-invariance") return check_move_invariance(cutoff);
  if (name == "fold-lemma") return check_fold_lemma(4);
  if (name == "exposed-preserved") return check_exposed_preserved();
  if (name == "doubles") return check_doubles(radius, cutoff);
  throw CoxError(Err::parse_error, "unknown check '" + name + "'");
}

}  // namespace cox
