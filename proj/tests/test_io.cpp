#include "doctest.h"

#include <sstream>

#include "cox/catalog.hpp"
#include "cox/instance_io.hpp"
#include "cox/twist.hpp"

using namespace cox;

TEST_CASE("instance round trip") {
  for (const auto& inst : catalog::instances()) {
    std::ostringstream out;
    write_instance(out, inst.graph);
    std::istringstream in(out.str());
    DefiningGraph back = parse_instance(in);
    CHECK(back == inst.graph);
    // serialize(parse(.)) is the identity on canonical files
    std::ostringstream out2;
    write_instance(out2, back);
    CHECK(out2.str() == out.str());
  }
}

TEST_CASE("instance parse errors") {
  auto bad = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_instance(in), CoxError);
  };
  bad("nope v1\ngens a b\n");
  bad("cox v1\n");
  bad("cox v1\ngens a a\n");
  bad("cox v1\ngens a b\nedge a c 3\n");
  bad("cox v1\ngens a b\nedge a b 1\n");
  bad("cox v1\ngens a b\nedge a b 3\nedge b a 4\n");
  bad("cox v1\ngens a b\nfrobnicate\n");
}

TEST_CASE("generator words round trip") {
  auto q3 = catalog::path434();
  WordEngine amb(q3);
  ElementaryTwist tw{single(1) | single(2), single(0), single(3)};
  auto gens = apply_twist_generators(amb, standard_set(q3), tw);

  std::ostringstream out;
  write_words(out, amb, gens.graph.names(), gens.elements);
  CHECK(out.str().find("b := s t s b s t s") != std::string::npos);

  std::istringstream in(out.str());
  auto nw = parse_words(in, amb);
  auto rebuilt = set_from_words(amb, nw);
  CHECK(rebuilt.elements == gens.elements);
  CHECK(rebuilt.graph == gens.graph);  // labels recovered from product orders

  std::istringstream junk("b = s t\n");
  CHECK_THROWS_AS(parse_words(junk, amb), CoxError);
  std::istringstream notinv("x := s t\n");
  CHECK_THROWS_AS(set_from_words(amb, parse_words(notinv, amb)), CoxError);
}

TEST_CASE("instance discovery at n = 4") {
  auto result = discover_instances(4, {2, 3, 4, 5}, 100000);
  CHECK(result.complete);

  auto contains_graph = [&](const DefiningGraph& g) {
    std::string key = canonical_graph_key(g);
    for (const auto& inst : result.instances)
      if (canonical_graph_key(inst.graph) == key) return true;
    return false;
  };
  CHECK(contains_graph(catalog::path434()));
  CHECK(contains_graph(catalog::path444()));
  CHECK(contains_graph(catalog::path353()));

  for (const auto& inst : result.instances) {
    CHECK(inst.fc);
    CHECK(inst.irreducible);
    CHECK(inst.nonspherical);
    CHECK(inst.rigid3class);
  }

  // single vertices are spherical, so n = 1 yields nothing
  auto tiny = discover_instances(1, {2, 3, 4, 5}, 1000);
  CHECK(tiny.instances.empty());
}
