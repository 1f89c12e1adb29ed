#include "cox/roots_f4.hpp"

#include <numeric>
#include <stdexcept>

namespace cox {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
  return Rational(num * o.den, den * o.num);
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Vec4 add(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Vec4 scale(const Rational& c, const Vec4& v) {
  return {c * v[0], c * v[1], c * v[2], c * v[3]};
}

Rational dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

// v - 2 (v, alpha)/(alpha, alpha) alpha
Vec4 reflect(const Vec4& alpha, const Vec4& v) {
  Rational c = Rational(2) * dot(v, alpha) / dot(alpha, alpha);
  return add(v, scale(Rational(0) - c, alpha));
}

std::string show(const Vec4& v) {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

}  // namespace

F4RootReport verify_f4_roots() {
  const Vec4 au{Rational(1), Rational(-1), Rational(0), Rational(0)};
  const Vec4 as{Rational(0), Rational(1), Rational(-1), Rational(0)};
  const Vec4 at{Rational(0), Rational(0), Rational(1), Rational(0)};
  const Vec4 ap{Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)};

  auto u = [&](const Vec4& v) { return reflect(au, v); };
  auto s = [&](const Vec4& v) { return reflect(as, v); };
  auto t = [&](const Vec4& v) { return reflect(at, v); };
  auto p = [&](const Vec4& v) { return reflect(ap, v); };

  F4RootReport rep;
  rep.ok = true;
  auto check = [&](const std::string& name, const Vec4& got, const Vec4& want) {
    bool ok = got == want;
    rep.ok = rep.ok && ok;
    rep.lines.push_back(name + " = " + show(got) + (ok ? "  [ok]" : "  [MISMATCH, expected " + show(want) + "]"));
  };

  const Vec4 u_as = u(as);
  const Vec4 tu_as = t(u_as);
  const Vec4 ptu_as = p(tu_as);
  const Vec4 p_at = p(at);
  const Vec4 sp_at = s(p_at);
  const Vec4 usp_at = u(sp_at);

  check("u.a_s", u_as, add(au, as));
  check("tu.a_s", tu_as, add(add(au, as), scale(Rational(2), at)));
  check("ptu.a_s", ptu_as, add(add(au, as), add(scale(Rational(2), at), scale(Rational(2), ap))));
  check("p.a_t", p_at, add(at, ap));
  check("sp.a_t", sp_at, add(as, add(at, ap)));
  check("usp.a_t", usp_at, add(au, add(as, add(at, ap))));
  check("u.a_s + ptu.a_s", add(u_as, ptu_as), scale(Rational(2), usp_at));

  if (rep.ok)
    rep.lines.push_back(
        "positivity: <v,u.a_s> > 0 and <v,ptu.a_s> > 0 force <v,usp.a_t> > 0, "
        "so U n usp.H_t^- is empty");
  return rep;
}

}  // namespace cox
