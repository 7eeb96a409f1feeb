#pragma once

#include "symm/rational.hpp"

namespace symm {

/// Closed rational bracket [lo, hi] certified to contain a real value.
/// The helpers below only ever manipulate non-negative brackets, which is
/// all the inequality comparisons need.
struct RatInterval {
  Rational lo, hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

/// Bracket of x^(1/p) of width <= 2^-bits, for x >= 0, p >= 1.
RatInterval nth_root_bracket(const Rational& x, unsigned long p, unsigned long bits);

RatInterval sqrt_bracket(const Rational& x, unsigned long bits);

/// True (and sets out) iff x^(1/p) is rational, for x >= 0.
bool exact_nth_root(const Rational& x, unsigned long p, Rational& out);

/// Widens to enclosing endpoints with denominator 2^bits; keeps stored
/// constants small before they get raised to large powers.
RatInterval round_outward(const RatInterval& iv, unsigned long bits);

RatInterval mul_pos(const RatInterval& a, const RatInterval& b);
RatInterval add(const RatInterval& a, const RatInterval& b);
RatInterval pow_pos(const RatInterval& a, unsigned long e);

/// max of two bracketed values.
RatInterval max_iv(const RatInterval& a, const RatInterval& b);

/// a / b for positive b (b.lo > 0).
RatInterval div_pos(const RatInterval& a, const RatInterval& b);

}  // namespace symm
