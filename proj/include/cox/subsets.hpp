#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cox {

// Generators are small indices into a DefiningGraph; subsets are bitmasks.
using Gen = int;
using GenSet = std::uint32_t;

// Words are sequences of generator indices, one char per letter. Group
// elements are the ShortLex-least reduced words of their class; WordEngine
// produces and consumes these.
using Word = std::string;

inline constexpr GenSet empty_set = 0;

inline GenSet single(Gen g) { return GenSet{1} << g; }
inline bool contains(GenSet a, Gen g) { return (a >> g) & 1u; }
inline bool subset_of(GenSet a, GenSet b) { return (a & ~b) == 0; }
inline int size_of(GenSet a) { return std::popcount(a); }
inline GenSet full_set(int n) { return n == 32 ? ~GenSet{0} : (GenSet{1} << n) - 1; }
inline Gen least(GenSet a) { return std::countr_zero(a); }

inline std::vector<Gen> members(GenSet a) {
  std::vector<Gen> out;
  for (GenSet m = a; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Visits all nonempty subsets of mask in increasing numeric order.
template <typename F>
void for_each_subset(GenSet mask, F&& f) {
  for (GenSet s = mask; s; s = (s - 1) & mask) f(s);
}

}  // namespace cox
