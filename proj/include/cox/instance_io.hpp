#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cox/marking.hpp"

namespace cox {

// Instance files:
//   cox v1
//   gens a s t b
//   edge a s 4
// Absent edges mean an infinite label; unknown directives are rejected.
DefiningGraph parse_instance(std::istream& in);
DefiningGraph load_instance(const std::string& path);
void write_instance(std::ostream& out, const DefiningGraph& g);

// Generator-word files: one "name := letter letter ..." line per generator,
// letters over the ambient (reference) generator names. "e" is the empty word.
struct NamedWords {
  std::vector<std::string> names;
  std::vector<Word> words;  // ambient canonical
};
NamedWords parse_words(std::istream& in, const WordEngine& amb);
NamedWords load_words(const std::string& path, const WordEngine& amb);
void write_words(std::ostream& out, const WordEngine& amb, const std::vector<std::string>& names,
                 const std::vector<Word>& words);

// Builds a generating set from ambient words: involutions are checked and the
// defining graph is recovered from pairwise product orders at the cutoff.
GeneratingSet set_from_words(const WordEngine& amb, const NamedWords& nw, int cutoff = 100);

// ---- instance discovery --------------------------------------------------

struct DiscoveredInstance {
  DefiningGraph graph;
  bool fc = false;
  bool irreducible = false;
  bool nonspherical = false;
  bool rigid3class = false;       // every twist equivalent is 3-rigid
  bool dihedral_twistable = false;  // some weakly separating pair
};

struct DiscoverResult {
  std::vector<DiscoveredInstance> instances;  // canonical representatives
  bool complete = true;                       // false when the cap was hit
};

// Enumerates defining graphs with <= max_n generators and finite labels from
// `labels`, up to label-preserving isomorphism, keeping those that pass the
// pipeline filters (FC, irreducible, non-spherical, 3-rigid twist class).
DiscoverResult discover_instances(int max_n, const std::vector<int>& labels, std::size_t cap);

void write_catalog(std::ostream& out, const DiscoverResult& r);

}  // namespace cox
