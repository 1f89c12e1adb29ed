#pragma once

#include <vector>

#include "cox/defining_graph.hpp"

namespace cox::catalog {

struct Edge {
  std::string a, b;
  int m;
};

DefiningGraph make_graph(const std::vector<std::string>& names, const std::vector<Edge>& edges);

// The instances used throughout the test and verification drivers.
DefiningGraph path434();   // a-s-t-b, labels 4,3,4
DefiningGraph path444();   // a-s-t-b, labels 4,4,4
DefiningGraph path353();   // a-s-t-b, labels 3,5,3
DefiningGraph a3tail();    // s,t,p,q: s-t 3, t-p 3, s-p 2, t-q 4
DefiningGraph a3tail_x();  // a3tail + x, p-x 3
DefiningGraph a3tail_xq(); // a3tail_x + q-x 3
DefiningGraph f4chain();   // u-s-t-p, labels 3,4,3, other pairs commute
DefiningGraph dstar4();    // s,t,p,q,y: A3 {s,t,p} + t-q 3 + q-y 4
DefiningGraph h3tail6();   // u,s,t,z: H3 {u,s,t} + t-z 6
DefiningGraph triangle333();

struct Instance {
  std::string name;
  DefiningGraph graph;
  bool pipeline;  // irreducible, not spherical, FC: accepted by pipeline modules
};

const std::vector<Instance>& instances();

}  // namespace cox::catalog
