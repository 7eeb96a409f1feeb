#include "symm/intpoly.hpp"

#include <stdexcept>

namespace symm {

bool is_zero(const IntPoly& p) { return p.c.empty(); }

int degree(const IntPoly& p) { return static_cast<int>(p.c.size()) - 1; }

IntPoly normalize(IntPoly p) {
  size_t i = 0;
  while (i < p.c.size() && sgn(p.c[i]) == 0) ++i;
  if (i > 0) p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(i));
  return p;
}

Int content(const IntPoly& p) {
  Int g(0);
  for (const Int& a : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(IntPoly p) {
  p = normalize(std::move(p));
  if (is_zero(p)) return p;
  Int g = content(p);
  if (g > 1)
    for (Int& a : p.c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return p;
}

IntPoly derivative(const IntPoly& p) {
  int d = degree(p);
  if (d <= 0) return IntPoly{};
  IntPoly r;
  r.c.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) r.c[static_cast<size_t>(i)] = p.c[static_cast<size_t>(i)] * (d - i);
  return normalize(std::move(r));
}

IntPoly negate(IntPoly p) {
  for (Int& a : p.c) a = -a;
  return p;
}

IntPoly prem_pos(IntPoly u, const IntPoly& v) {
  if (is_zero(v)) throw std::logic_error("prem_pos: division by zero polynomial");
  u = normalize(std::move(u));
  const int dv = degree(v);
  const Int& lv = v.c.front();
  long steps = 0;
  while (!is_zero(u) && degree(u) >= dv) {
    Int lu = u.c.front();
    // u := lv*u - lu * z^(deg u - deg v) * v ; kills the leading term
    // (indices align at the top power in the descending representation)
    for (Int& a : u.c) a *= lv;
    for (int j = 0; j <= dv; ++j)
      u.c[static_cast<size_t>(j)] -= lu * v.c[static_cast<size_t>(j)];
    u = normalize(std::move(u));
    ++steps;
  }
  // each step scaled by lv; fix the overall sign to keep a positive multiple
  if (sgn(lv) < 0 && (steps % 2) != 0) u = negate(std::move(u));
  return u;
}

IntPoly gcd_poly(IntPoly a, IntPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (is_zero(a)) std::swap(a, b);
  while (!is_zero(b)) {
    if (degree(a) < degree(b)) std::swap(a, b);
    IntPoly r = prem_pos(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  if (!is_zero(a) && sgn(a.c.front()) < 0) a = negate(std::move(a));
  return a;
}

IntPoly divexact(const IntPoly& p, const IntPoly& g) {
  if (is_zero(g)) throw std::logic_error("divexact: division by zero polynomial");
  if (is_zero(p)) return IntPoly{};
  const int dp = degree(p), dg = degree(g);
  if (dp < dg) throw std::logic_error("divexact: degree mismatch");
  std::vector<Int> r = p.c;
  std::vector<Int> q(static_cast<size_t>(dp - dg) + 1);
  for (int i = 0; i <= dp - dg; ++i) {
    Int qi;
    if (!mpz_divisible_p(r[static_cast<size_t>(i)].get_mpz_t(), g.c.front().get_mpz_t()))
      throw std::logic_error("divexact: inexact division");
    mpz_divexact(qi.get_mpz_t(), r[static_cast<size_t>(i)].get_mpz_t(), g.c.front().get_mpz_t());
    for (int j = 0; j <= dg; ++j)
      r[static_cast<size_t>(i + j)] -= qi * g.c[static_cast<size_t>(j)];
    q[static_cast<size_t>(i)] = std::move(qi);
  }
  for (const Int& rest : r)
    if (sgn(rest) != 0) throw std::logic_error("divexact: nonzero remainder");
  return normalize(IntPoly{std::move(q)});
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (is_zero(a) || is_zero(b)) return IntPoly{};
  std::vector<Int> c(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  return IntPoly{std::move(c)};
}

int sign_at(const IntPoly& p, const Rational& x) {
  if (is_zero(p)) return 0;
  const int d = degree(p);
  const Int& u = x.get_num();
  const Int& v = x.get_den();  // > 0 in canonical form
  // sum c_i u^{d-i} v^i, computed Horner-style in u with a running power of v
  Int acc(0);
  Int vpow(1);
  for (int i = 0; i <= d; ++i) {
    acc = acc * u + p.c[static_cast<size_t>(i)] * vpow;
    if (i < d) vpow *= v;
  }
  return sgn(acc);
}

int sign_at_pos_inf(const IntPoly& p) { return is_zero(p) ? 0 : sgn(p.c.front()); }

int sign_at_neg_inf(const IntPoly& p) {
  if (is_zero(p)) return 0;
  int s = sgn(p.c.front());
  return (degree(p) % 2) ? -s : s;
}

IntPoly from_rational(const std::vector<Rational>& coeffs) {
  Int l(1);
  for (const Rational& q : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  IntPoly p;
  p.c.reserve(coeffs.size());
  for (const Rational& q : coeffs) {
    Rational scaled = q * Rational(l);
    p.c.emplace_back(scaled.get_num());
  }
  return normalize(std::move(p));
}

IntPoly squarefree_part(const IntPoly& p) {
  IntPoly pp = primitive_part(p);
  if (degree(pp) < 1) throw std::logic_error("squarefree_part: degree >= 1 required");
  IntPoly g = gcd_poly(pp, derivative(pp));
  if (degree(g) == 0) return pp;
  return primitive_part(divexact(pp, g));
}

}  // namespace symm
