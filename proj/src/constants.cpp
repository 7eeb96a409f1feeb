#include "symm/constants.hpp"

#include <stdexcept>

#include "symm/binomial.hpp"

namespace symm {

RatInterval exp_bracket(const Rational& u, unsigned terms) {
  if (sgn(u) <= 0 || u > 2) throw std::domain_error("exp_bracket: need 0 < u <= 2");
  if (terms < 4) throw std::domain_error("exp_bracket: need at least 4 terms");
  Rational sum(1);
  Rational term(1);
  for (unsigned j = 1; j <= terms; ++j) {
    term *= u / Rational(j);
    sum += term;
  }
  // tail <= u^{m+1}/(m+1)! * 1/(1 - u/(m+2)) <= 2 u^{m+1}/(m+1)! for u <= 2, m >= 2
  Rational tail = 2 * term * u / Rational(terms + 1);
  return {sum, sum + tail};
}

const RatInterval& euler_e() {
  static const RatInterval e = [] {
    const unsigned m = 40;
    Rational lo(0);
    for (unsigned j = 0; j <= m; ++j) lo += make_frac(Int(1), factorial(j));
    Rational hi = lo + make_frac(Int(2), factorial(m + 1));
    return round_outward({lo, hi}, 192);
  }();
  return e;
}

const RatInterval& c_main() {
  static const RatInterval c = [] {
    RatInterval e7 = pow_pos(euler_e(), 7);
    return round_outward({160 * e7.lo, 160 * e7.hi}, 96);
  }();
  return c;
}

const RatInterval& c_prev() {
  static const RatInterval c = [] {
    const RatInterval& e = euler_e();
    // u = 4/e, decreasing in e
    RatInterval u{Rational(4) / e.hi, Rational(4) / e.lo};
    RatInterval eu{exp_bracket(u.lo, 40).lo, exp_bracket(u.hi, 40).hi};
    RatInterval s2 = sqrt_bracket(Rational(2), 128);
    RatInterval a = mul_pos(eu, s2);
    RatInterval s7 = sqrt_bracket(Rational(7), 128);
    RatInterval b{2 * s7.lo, 2 * s7.hi};
    return round_outward(max_iv(a, b), 96);
  }();
  return c;
}

const Rational& lee_default_c() {
  static const Rational c = [] {
    Rational v = c_main().hi * c_main().hi * euler_e().hi * euler_e().hi;
    return round_outward({v, v}, 96).hi;
  }();
  return c;
}

}  // namespace symm
