#include "cox/catalog.hpp"

namespace cox::catalog {

DefiningGraph make_graph(const std::vector<std::string>& names, const std::vector<Edge>& edges) {
  DefiningGraph g(names);
  for (const auto& e : edges) {
    Gen a = g.index_of(e.a), b = g.index_of(e.b);
    if (a < 0 || b < 0) throw CoxError(Err::parse_error, "unknown vertex in edge list");
    g.set_label(a, b, e.m);
  }
  return g;
}

DefiningGraph path434() {
  return make_graph({"a", "s", "t", "b"}, {{"a", "s", 4}, {"s", "t", 3}, {"t", "b", 4}});
}

DefiningGraph path444() {
  return make_graph({"a", "s", "t", "b"}, {{"a", "s", 4}, {"s", "t", 4}, {"t", "b", 4}});
}

DefiningGraph path353() {
  return make_graph({"a", "s", "t", "b"}, {{"a", "s", 3}, {"s", "t", 5}, {"t", "b", 3}});
}

DefiningGraph a3tail() {
  return make_graph({"s", "t", "p", "q"},
                    {{"s", "t", 3}, {"t", "p", 3}, {"s", "p", 2}, {"t", "q", 4}});
}

DefiningGraph a3tail_x() {
  return make_graph({"s", "t", "p", "q", "x"},
                    {{"s", "t", 3}, {"t", "p", 3}, {"s", "p", 2}, {"t", "q", 4}, {"p", "x", 3}});
}

DefiningGraph a3tail_xq() {
  return make_graph({"s", "t", "p", "q", "x"},
                    {{"s", "t", 3},
                     {"t", "p", 3},
                     {"s", "p", 2},
                     {"t", "q", 4},
                     {"p", "x", 3},
                     {"q", "x", 3}});
}

DefiningGraph f4chain() {
  return make_graph({"u", "s", "t", "p"},
                    {{"u", "s", 3},
                     {"s", "t", 4},
                     {"t", "p", 3},
                     {"u", "t", 2},
                     {"u", "p", 2},
                     {"s", "p", 2}});
}

DefiningGraph dstar4() {
  return make_graph({"s", "t", "p", "q", "y"},
                    {{"s", "t", 3}, {"t", "p", 3}, {"s", "p", 2}, {"t", "q", 3}, {"q", "y", 4}});
}

DefiningGraph h3tail6() {
  return make_graph({"u", "s", "t", "z"},
                    {{"u", "s", 5}, {"s", "t", 3}, {"u", "t", 2}, {"t", "z", 6}});
}

DefiningGraph triangle333() {
  return make_graph({"x", "y", "z"}, {{"x", "y", 3}, {"y", "z", 3}, {"x", "z", 3}});
}

const std::vector<Instance>& instances() {
  static const std::vector<Instance> all = {
      {"path434", path434(), true},     {"path444", path444(), true},
      {"path353", path353(), true},     {"a3tail", a3tail(), true},
      {"a3tail_x", a3tail_x(), true},   {"a3tail_xq", a3tail_xq(), true},
      {"dstar4", dstar4(), true},       {"h3tail6", h3tail6(), true},
      {"f4chain", f4chain(), false},    {"triangle333", triangle333(), false},
  };
  return all;
}

}  // namespace cox::catalog
