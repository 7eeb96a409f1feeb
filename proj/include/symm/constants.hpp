#pragma once

#include "symm/interval.hpp"

namespace symm {

/// Certified rational brackets for the irrational constants used by the
/// inequality checks. Checks take the upper endpoint, so a "holds" verdict
/// is conservative.

/// Bracket of e (truncated series plus a tail bound).
const RatInterval& euler_e();

/// Bracket of 160 * e^7 (approximately 175461.3).
const RatInterval& c_main();

/// Bracket of max(e^{4/e} * sqrt(2), 2 * sqrt(7)) = 6.160089...
const RatInterval& c_prev();

/// Default constant for the factorial-normalized (Lee) form: an upper
/// bracket of c_main^2 * e^2, which is what the binomial bounds
/// n^k/k^k <= C(n,k) <= n^k/k! and the weak Stirling bounds
/// k^k/e^k <= k! <= k^k turn the main inequality constant into.
const Rational& lee_default_c();

/// exp(u) bracket for rational 0 < u <= 2.
RatInterval exp_bracket(const Rational& u, unsigned terms);

}  // namespace symm
