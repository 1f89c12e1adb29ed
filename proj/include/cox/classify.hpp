#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cox/defining_graph.hpp"

namespace cox {

enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

struct FactorType {
  GenSet gens = 0;     // members of this Dynkin component
  bool finite = false;
  Family family = Family::A;
  int rank = 0;
  int m = 0;           // edge label for I2(m)

  std::uint64_t order() const;      // only for finite factors
  int reflection_count() const;
  int coxeter_number() const;
  std::string to_string() const;
};

// Per-irreducible-factor verdict; spherical iff every factor is finite.
struct SphericalType {
  std::vector<FactorType> factors;
  bool spherical() const;
  std::uint64_t order() const;      // product over factors; requires spherical
  std::string to_string() const;
};

SphericalType classify(const DefiningGraph& g, GenSet j);
bool is_spherical(const DefiningGraph& g, GenSet j);

// Every clique of the defining graph is spherical (checked on maximal cliques).
bool is_fc(const DefiningGraph& g);

std::vector<GenSet> maximal_cliques(const DefiningGraph& g);

// Inclusion-maximal spherical subsets, ascending mask order. Requires FC.
std::vector<GenSet> maximal_spherical_subsets(const DefiningGraph& g);

// A reduced word for the longest element w_J (bipartite alternating product).
// The word has length = reflection count of J; it is not canonicalized.
Word longest_element(const DefiningGraph& g, GenSet j);

int reflection_count(const DefiningGraph& g, GenSet j);

// The permutation j -> w_J j w_J^-1 of an irreducible spherical J,
// as a map over the graph's generators (identity off J).
std::array<Gen, 32> opposition(const DefiningGraph& g, GenSet j);

// Induced subgraph plus the map from new indices back to g's generators.
std::pair<DefiningGraph, std::vector<Gen>> induced_subgraph(const DefiningGraph& g, GenSet j);

}  // namespace cox
