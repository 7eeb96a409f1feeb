#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace symm {

/// Arbitrary-precision integer and rational scalars. All verification paths
/// run on Rational so inequality verdicts never hinge on rounding; binary64
/// is reserved for the numeric search.
using Int = mpz_class;
using Rational = mpq_class;

enum class Mode { exact, floating };

std::string mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& name);

/// num/den in canonical form (den != 0).
Rational make_frac(long num, long den);
Rational make_frac(const Int& num, const Int& den);

/// b^e for e >= 0.
Int pow_int(const Int& b, unsigned long e);
Rational pow_rat(const Rational& b, unsigned long e);

Rational abs_rat(const Rational& q);

double to_double(const Rational& q);

/// Parses "p/q", "p", or a plain decimal like "-1.25" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical "p" or "p/q" form.
std::string format_rational(const Rational& q);

/// Truncates toward zero onto the grid of rationals with denominator 2^53.
/// This is the documented snapping rule used whenever binary64 data enters
/// an exact-mode computation. Throws std::domain_error on non-finite input.
Rational snap_to_dyadic(double x);
Rational snap_to_dyadic(const Rational& x);

}  // namespace symm
