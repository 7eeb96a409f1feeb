#include "symm/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace symm {

std::string mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

std::optional<Mode> mode_from_name(const std::string& name) {
  if (name == "exact") return Mode::exact;
  if (name == "float") return Mode::floating;
  return std::nullopt;
}

Rational make_frac(long num, long den) { return make_frac(Int(num), Int(den)); }

Rational make_frac(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::domain_error("make_frac: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational pow_rat(const Rational& b, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), b.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), b.get_den().get_mpz_t(), e);
  return r;  // canonical: powers of coprime integers stay coprime
}

Rational abs_rat(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

double to_double(const Rational& q) { return q.get_d(); }

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty input");

  auto is_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  bool neg = false;
  size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  if (body.empty()) throw std::invalid_argument("parse_rational: '" + text + "'");

  Rational q;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den) || den.find_first_not_of('0') == std::string::npos)
      throw std::invalid_argument("parse_rational: '" + text + "'");
    q = make_frac(Int(num), Int(den));
  } else if (dot != std::string::npos) {
    std::string ip = body.substr(0, dot);
    std::string fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!is_digits(ip) || (!fp.empty() && !is_digits(fp)))
      throw std::invalid_argument("parse_rational: '" + text + "'");
    Int scale = pow_int(Int(10), fp.size());
    Int digits = Int(ip) * scale + (fp.empty() ? Int(0) : Int(fp));
    q = make_frac(digits, scale);
  } else {
    if (!is_digits(body)) throw std::invalid_argument("parse_rational: '" + text + "'");
    q = Rational(Int(body));
  }
  return neg ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Rational snap_to_dyadic(double x) {
  if (!std::isfinite(x)) throw std::domain_error("snap_to_dyadic: non-finite value");
  return snap_to_dyadic(Rational(x));
}

Rational snap_to_dyadic(const Rational& x) {
  static const Int kDen = pow_int(Int(2), 53);
  Int m;
  // truncate x * 2^53 toward zero
  mpz_tdiv_q(m.get_mpz_t(), Int(x.get_num() * kDen).get_mpz_t(), x.get_den().get_mpz_t());
  return make_frac(m, kDen);
}

}  // namespace symm
