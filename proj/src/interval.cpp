#include "symm/interval.hpp"

#include <stdexcept>

namespace symm {

RatInterval nth_root_bracket(const Rational& x, unsigned long p, unsigned long bits) {
  if (p == 0) throw std::domain_error("nth_root_bracket: p >= 1 required");
  if (sgn(x) < 0) throw std::domain_error("nth_root_bracket: negative argument");
  if (sgn(x) == 0) return {Rational(0), Rational(0)};

  // scaled = floor(x * 2^(p*bits)); r = floor(scaled^(1/p))
  Int scaled;
  {
    Int num = x.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), p * bits);
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  }
  Int r;
  mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), p);

  Int den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return {make_frac(r, den), make_frac(Int(r + 1), den)};
}

RatInterval sqrt_bracket(const Rational& x, unsigned long bits) {
  return nth_root_bracket(x, 2, bits);
}

bool exact_nth_root(const Rational& x, unsigned long p, Rational& out) {
  if (p == 0) throw std::domain_error("exact_nth_root: p >= 1 required");
  if (sgn(x) < 0) throw std::domain_error("exact_nth_root: negative argument");
  if (sgn(x) == 0) {
    out = 0;
    return true;
  }
  Int rn, rd;
  if (!mpz_root(rn.get_mpz_t(), x.get_num().get_mpz_t(), p)) return false;
  if (!mpz_root(rd.get_mpz_t(), x.get_den().get_mpz_t(), p)) return false;
  out = make_frac(rn, rd);
  return true;
}

RatInterval round_outward(const RatInterval& iv, unsigned long bits) {
  Int den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Int lo, hi;
  {
    Rational s = iv.lo * Rational(den);
    mpz_fdiv_q(lo.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    s = iv.hi * Rational(den);
    mpz_cdiv_q(hi.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
  }
  return {make_frac(lo, den), make_frac(hi, den)};
}

RatInterval mul_pos(const RatInterval& a, const RatInterval& b) {
  return {a.lo * b.lo, a.hi * b.hi};
}

RatInterval add(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval pow_pos(const RatInterval& a, unsigned long e) {
  return {pow_rat(a.lo, e), pow_rat(a.hi, e)};
}

RatInterval max_iv(const RatInterval& a, const RatInterval& b) {
  return {a.lo >= b.lo ? a.lo : b.lo, a.hi >= b.hi ? a.hi : b.hi};
}

RatInterval div_pos(const RatInterval& a, const RatInterval& b) {
  if (sgn(b.lo) <= 0) throw std::domain_error("div_pos: divisor bracket must be positive");
  return {a.lo / b.hi, a.hi / b.lo};
}

}  // namespace symm
