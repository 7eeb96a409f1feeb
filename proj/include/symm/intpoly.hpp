#pragma once

#include <vector>

#include "symm/rational.hpp"

namespace symm {

/// Integer polynomial in descending powers; c.front() is the leading
/// coefficient and is nonzero unless the polynomial is zero (empty c).
/// Exact-rational polynomials enter through from_rational, which clears
/// denominators; everything downstream stays in Z[z].
struct IntPoly {
  std::vector<Int> c;
};

bool is_zero(const IntPoly& p);
int degree(const IntPoly& p);  // -1 for the zero polynomial

/// Strips leading zero coefficients.
IntPoly normalize(IntPoly p);

/// gcd of the coefficients, positive; 0 for the zero polynomial.
Int content(const IntPoly& p);

/// p divided by its content (sign of the leading coefficient preserved).
IntPoly primitive_part(IntPoly p);

IntPoly derivative(const IntPoly& p);
IntPoly negate(IntPoly p);

/// Positive integer multiple of the polynomial remainder of u by v
/// (pseudo-remainder with the sign of the scaling factor corrected, so the
/// result is the true remainder times a positive constant). v must be
/// nonzero.
IntPoly prem_pos(IntPoly u, const IntPoly& v);

/// Primitive gcd with a positive leading coefficient.
IntPoly gcd_poly(IntPoly a, IntPoly b);

/// p / g when the division is exact over Z (as it is for a primitive p and
/// its primitive gcd factors). Throws std::logic_error when not exact.
IntPoly divexact(const IntPoly& p, const IntPoly& g);

IntPoly mul(const IntPoly& a, const IntPoly& b);

/// Sign of p(x) for rational x (exact, via homogeneous evaluation).
int sign_at(const IntPoly& p, const Rational& x);
int sign_at_pos_inf(const IntPoly& p);
int sign_at_neg_inf(const IntPoly& p);

/// Clears denominators of descending rational coefficients. The result has
/// the same roots; it is not content-normalized.
IntPoly from_rational(const std::vector<Rational>& coeffs);

/// p / gcd(p, p'), primitive. Requires deg p >= 1.
IntPoly squarefree_part(const IntPoly& p);

}  // namespace symm
