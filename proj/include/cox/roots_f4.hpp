#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cox {

// Exact rational arithmetic for the F4 reflection representation check.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const = default;
  std::string to_string() const;
};

using Vec4 = std::array<Rational, 4>;

struct F4RootReport {
  bool ok = false;
  std::vector<std::string> lines;  // one line per verified identity
};

// Verifies the six intermediate root images and the sum identity
// u.as + ptu.as = 2 usp.at in the F4 reflection representation, over exact
// rationals, and records the emptiness conclusion for U n usp H_t^-.
F4RootReport verify_f4_roots();

}  // namespace cox
