#include "symm/inequalities.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "symm/binomial.hpp"
#include "symm/symm_core.hpp"

namespace symm {

namespace {

Rational sq(const Rational& q) { return q * q; }

long lcm_l(long a, long b) { return a / std::gcd(a, b) * b; }

void finish_exact(IneqReport& rep) {
  rep.holds = sgn(rep.slack) >= 0;
  rep.slack_value = to_double(rep.slack);
}

bool float_ok(double slack, double lhs, double rhs, double tol) {
  return slack >= -tol * std::max(std::fabs(lhs), std::fabs(rhs));
}

double dbinom(int n, int k) { return binomial(n, k).get_d(); }

}  // namespace

// ---------------------------------------------------------------------------
// Newton: s_{k-1} s_{k+1} <= s_k^2

IneqReport check_newton(const MeansTuple<Rational>& s) {
  const int n = s.n();
  if (n < 2) throw std::domain_error("check_newton: n >= 2 required");
  IneqReport rep;
  rep.name = "newton";
  bool first = true;
  for (int k = 1; k < n; ++k) {
    Rational slack = sq(s[k]) - s[k - 1] * s[k + 1];
    if (first || slack < rep.slack) {
      rep.slack = slack;
      rep.worst_index = {k};
      first = false;
    }
  }
  rep.slack_power = 1;
  finish_exact(rep);
  return rep;
}

IneqReport check_newton(const MeansTuple<double>& s, double tol) {
  const int n = s.n();
  if (n < 2) throw std::domain_error("check_newton: n >= 2 required");
  IneqReport rep;
  rep.name = "newton";
  rep.mode = Mode::floating;
  rep.holds = true;
  bool first = true;
  for (int k = 1; k < n; ++k) {
    double lhs = s[k - 1] * s[k + 1], rhs = s[k] * s[k];
    double slack = rhs - lhs;
    rep.holds = rep.holds && float_ok(slack, lhs, rhs, tol);
    if (first || slack < rep.slack_value) {
      rep.slack_value = slack;
      rep.worst_index = {k};
      first = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Maclaurin chain: s_1 >= s_2^{1/2} >= ... >= s_n^{1/n} (non-negative roots)

namespace {

IneqReport maclaurin_exact_checked(const MeansTuple<Rational>& s) {
  const int n = s.n();
  IneqReport rep;
  rep.name = "maclaurin";
  rep.holds = true;
  bool first = true;
  // s_k^{1/k} >= s_{k+1}^{1/(k+1)}  <=>  s_k^{k+1} >= s_{k+1}^k  (all s >= 0)
  for (int k = 1; k < n; ++k) {
    Rational slack = pow_rat(s[k], static_cast<unsigned long>(k) + 1) -
                     pow_rat(s[k + 1], static_cast<unsigned long>(k));
    if (first || slack < rep.slack) {
      rep.slack = slack;
      rep.worst_index = {k};
      rep.slack_power = static_cast<long>(k) * (k + 1);
      first = false;
    }
    if (sgn(slack) < 0) break;
  }
  finish_exact(rep);
  return rep;
}

}  // namespace

IneqReport check_maclaurin(const MeansTuple<Rational>& s) {
  for (int k = 0; k <= s.n(); ++k)
    if (sgn(s[k]) < 0)
      throw std::domain_error("check_maclaurin: negative mean; roots must be non-negative");
  return maclaurin_exact_checked(s);
}

IneqReport check_maclaurin(const RootTuple<Rational>& y) {
  for (const Rational& r : y.roots)
    if (sgn(r) < 0) throw std::domain_error("check_maclaurin: negative root present");
  return maclaurin_exact_checked(elementary_means(y));
}

IneqReport check_maclaurin(const MeansTuple<double>& s, double tol) {
  const int n = s.n();
  for (int k = 0; k <= n; ++k)
    if (s[k] < 0)
      throw std::domain_error("check_maclaurin: negative mean; roots must be non-negative");
  IneqReport rep;
  rep.name = "maclaurin";
  rep.mode = Mode::floating;
  rep.holds = true;
  bool first = true;
  for (int k = 1; k < n; ++k) {
    double lhs = std::pow(s[k], 1.0 / k);
    double rhs = std::pow(s[k + 1], 1.0 / (k + 1));
    double slack = lhs - rhs;
    rep.holds = rep.holds && float_ok(slack, lhs, rhs, tol);
    if (first || slack < rep.slack_value) {
      rep.slack_value = slack;
      rep.worst_index = {k};
      first = false;
    }
  }
  return rep;
}

IneqReport check_maclaurin(const RootTuple<double>& y, double tol) {
  for (double r : y.roots)
    if (r < 0) throw std::domain_error("check_maclaurin: negative root present");
  return check_maclaurin(elementary_means(y), tol);
}

// ---------------------------------------------------------------------------
// Rosset's strengthening of the Newton inequality

IneqReport check_rosset(const MeansTuple<Rational>& s) {
  const int n = s.n();
  if (n < 3) throw std::domain_error("check_rosset: n >= 3 required");
  IneqReport rep;
  rep.name = "rosset";
  bool first = true;
  for (int k = 0; k + 3 <= n; ++k) {
    Rational a = sq(s[k + 2]) - s[k + 1] * s[k + 3];
    Rational b = sq(s[k + 1]) - s[k] * s[k + 2];
    Rational c = s[k + 1] * s[k + 2] - s[k] * s[k + 3];
    Rational slack = 4 * a * b - sq(c);
    if (first || slack < rep.slack) {
      rep.slack = slack;
      rep.worst_index = {k};
      first = false;
    }
  }
  rep.slack_power = 1;
  finish_exact(rep);
  return rep;
}

IneqReport check_rosset(const MeansTuple<double>& s, double tol) {
  const int n = s.n();
  if (n < 3) throw std::domain_error("check_rosset: n >= 3 required");
  IneqReport rep;
  rep.name = "rosset";
  rep.mode = Mode::floating;
  rep.holds = true;
  bool first = true;
  for (int k = 0; k + 3 <= n; ++k) {
    double a = s[k + 2] * s[k + 2] - s[k + 1] * s[k + 3];
    double b = s[k + 1] * s[k + 1] - s[k] * s[k + 2];
    double c = s[k + 1] * s[k + 2] - s[k] * s[k + 3];
    double lhs = 4 * a * b, rhs = c * c;
    double slack = lhs - rhs;
    rep.holds = rep.holds && float_ok(slack, lhs, rhs, tol);
    if (first || slack < rep.slack_value) {
      rep.slack_value = slack;
      rep.worst_index = {k};
      first = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// AM-GM: |s_n|^{2/n} <= (1/n) sum y_i^2

IneqReport check_amgm_bound(const RootTuple<Rational>& y) {
  const int n = y.n();
  if (n < 1) throw std::domain_error("check_amgm_bound: n >= 1 required");
  MeansTuple<Rational> s = elementary_means(y);
  Rational m2(0);
  for (const Rational& r : y.roots) m2 += sq(r);
  m2 /= n;
  IneqReport rep;
  rep.name = "amgm";
  // raised to the n-th power: s_n^2 <= m2^n
  rep.slack = pow_rat(m2, static_cast<unsigned long>(n)) - sq(s[n]);
  rep.slack_power = n;
  finish_exact(rep);
  return rep;
}

IneqReport check_amgm_bound(const RootTuple<double>& y, double tol) {
  const int n = y.n();
  if (n < 1) throw std::domain_error("check_amgm_bound: n >= 1 required");
  MeansTuple<double> s = elementary_means(y);
  double m2 = 0;
  for (double r : y.roots) m2 += r * r;
  m2 /= n;
  double lhs = std::pow(std::fabs(s[n]), 2.0 / n);
  IneqReport rep;
  rep.name = "amgm";
  rep.mode = Mode::floating;
  rep.slack_value = m2 - lhs;
  rep.holds = float_ok(rep.slack_value, lhs, m2, tol);
  return rep;
}

// ---------------------------------------------------------------------------
// Step bound: |s_l|^{2/l} <= l s_1^2 - (l-1) s_2

IneqReport check_step_bound(const MeansTuple<Rational>& s, int l) {
  const int n = s.n();
  if (l < 2 || l > n) throw std::domain_error("check_step_bound: 2 <= l <= n required");
  Rational rhs = l * sq(s[1]) - (l - 1) * s[2];
  IneqReport rep;
  rep.name = "step_bound";
  rep.worst_index = {l};
  if (sgn(s[l]) == 0) {
    rep.slack = rhs;
    rep.slack_power = 1;
  } else if (sgn(rhs) >= 0) {
    rep.slack = pow_rat(rhs, static_cast<unsigned long>(l)) - sq(s[l]);
    rep.slack_power = l;
  } else {
    // rhs < 0 < |s_l|^{2/l}: certified negative slack on the linear scale
    RatInterval t = nth_root_bracket(sq(s[l]), static_cast<unsigned long>(l), 64);
    rep.slack = rhs - t.lo;
    rep.slack_power = 1;
  }
  finish_exact(rep);
  return rep;
}

IneqReport check_step_bound(const MeansTuple<double>& s, int l, double tol) {
  const int n = s.n();
  if (l < 2 || l > n) throw std::domain_error("check_step_bound: 2 <= l <= n required");
  double lhs = std::pow(std::fabs(s[l]), 2.0 / l);
  double rhs = l * s[1] * s[1] - (l - 1) * s[2];
  IneqReport rep;
  rep.name = "step_bound";
  rep.mode = Mode::floating;
  rep.worst_index = {l};
  rep.slack_value = rhs - lhs;
  rep.holds = float_ok(rep.slack_value, lhs, rhs, tol);
  return rep;
}

// ---------------------------------------------------------------------------
// prev bound and main inequality share the max-of-two-terms shape

namespace {

// larger of |s_k|^{1/k}, |s_{k+1}|^{1/(k+1)}: cross-raised to 2k(k+1)
int argmax_plain(const MeansTuple<Rational>& s, int k) {
  Rational a = pow_rat(sq(s[k]), static_cast<unsigned long>(k) + 1);
  Rational b = pow_rat(sq(s[k + 1]), static_cast<unsigned long>(k));
  return a >= b ? k : k + 1;
}

// larger of (l/k')^{1/2} |s_{k'}|^{1/k'} over k' = k, k+1
int argmax_weighted(const MeansTuple<Rational>& s, int k, int l) {
  unsigned long e = static_cast<unsigned long>(k) * (k + 1);
  Rational a = pow_rat(make_frac(l, k), e) * pow_rat(sq(s[k]), static_cast<unsigned long>(k) + 1);
  Rational b = pow_rat(make_frac(l, k + 1), e) * pow_rat(sq(s[k + 1]), static_cast<unsigned long>(k));
  return a >= b ? k : k + 1;
}

}  // namespace

IneqReport check_prev_bound(const MeansTuple<Rational>& s, int k, int l) {
  return check_prev_bound(s, k, l, c_prev().hi);
}

IneqReport check_prev_bound(const MeansTuple<Rational>& s, int k, int l, const Rational& C) {
  const int n = s.n();
  if (k < 1 || k > l || l > n || k >= n)
    throw std::domain_error("check_prev_bound: need 1 <= k <= l <= n and k < n");
  const int ks = argmax_plain(s, k);
  const long L = lcm_l(l, ks);
  // |s_l|^{1/l} <= C l^{1/2} |s_ks|^{1/ks}, both sides raised to 2L
  Rational lhs = pow_rat(sq(s[l]), static_cast<unsigned long>(L / l));
  Rational rhs = pow_rat(C, 2 * static_cast<unsigned long>(L)) *
                 pow_rat(Rational(l), static_cast<unsigned long>(L)) *
                 pow_rat(sq(s[ks]), static_cast<unsigned long>(L / ks));
  IneqReport rep;
  rep.name = "prev_bound";
  rep.worst_index = {ks, l};
  rep.slack = rhs - lhs;
  rep.slack_power = 2 * L;
  rep.constant_used = C;
  finish_exact(rep);
  return rep;
}

IneqReport check_prev_bound(const MeansTuple<double>& s, int k, int l, double C, double tol) {
  const int n = s.n();
  if (k < 1 || k > l || l > n || k >= n)
    throw std::domain_error("check_prev_bound: need 1 <= k <= l <= n and k < n");
  if (C <= 0) C = to_double(c_prev().hi);
  double lhs = std::pow(std::fabs(s[l]), 1.0 / l);
  double tk = std::pow(std::fabs(s[k]), 1.0 / k);
  double tk1 = std::pow(std::fabs(s[k + 1]), 1.0 / (k + 1));
  double rhs = C * std::sqrt(static_cast<double>(l)) * std::max(tk, tk1);
  IneqReport rep;
  rep.name = "prev_bound";
  rep.mode = Mode::floating;
  rep.worst_index = {tk >= tk1 ? k : k + 1, l};
  rep.slack_value = rhs - lhs;
  rep.constant_used = Rational(C);
  rep.holds = float_ok(rep.slack_value, lhs, rhs, tol);
  return rep;
}

IneqReport check_main(const MeansTuple<Rational>& s, int k, int l) {
  return check_main(s, k, l, c_main().hi);
}

IneqReport check_main(const MeansTuple<Rational>& s, int k, int l, const Rational& C) {
  const int n = s.n();
  if (k < 1 || k >= l || l > n)
    throw std::domain_error("check_main: need 1 <= k < l <= n");
  const int ks = argmax_weighted(s, k, l);
  const long L = lcm_l(l, ks);
  // |s_l|^{1/l} <= C (l/ks)^{1/2} |s_ks|^{1/ks}, both sides raised to 2L
  Rational lhs = pow_rat(sq(s[l]), static_cast<unsigned long>(L / l));
  Rational rhs = pow_rat(C, 2 * static_cast<unsigned long>(L)) *
                 pow_rat(make_frac(l, ks), static_cast<unsigned long>(L)) *
                 pow_rat(sq(s[ks]), static_cast<unsigned long>(L / ks));
  IneqReport rep;
  rep.name = "main";
  rep.worst_index = {ks, l};
  rep.slack = rhs - lhs;
  rep.slack_power = 2 * L;
  rep.constant_used = C;
  finish_exact(rep);
  return rep;
}

IneqReport check_main(const MeansTuple<double>& s, int k, int l, double C, double tol) {
  const int n = s.n();
  if (k < 1 || k >= l || l > n)
    throw std::domain_error("check_main: need 1 <= k < l <= n");
  if (C <= 0) C = to_double(c_main().hi);
  double lhs = std::pow(std::fabs(s[l]), 1.0 / l);
  double tk = std::sqrt(static_cast<double>(l) / k) * std::pow(std::fabs(s[k]), 1.0 / k);
  double tk1 =
      std::sqrt(static_cast<double>(l) / (k + 1)) * std::pow(std::fabs(s[k + 1]), 1.0 / (k + 1));
  double rhs = C * std::max(tk, tk1);
  IneqReport rep;
  rep.name = "main";
  rep.mode = Mode::floating;
  rep.worst_index = {tk >= tk1 ? k : k + 1, l};
  rep.slack_value = rhs - lhs;
  rep.constant_used = Rational(C);
  rep.holds = float_ok(rep.slack_value, lhs, rhs, tol);
  return rep;
}

// ---------------------------------------------------------------------------
// Factorial-normalized (Lee) form

IneqReport check_lee_form(const std::vector<Rational>& S, int k, const Rational& theta) {
  return check_lee_form(S, k, theta, lee_default_c());
}

IneqReport check_lee_form(const std::vector<Rational>& S, int k, const Rational& theta,
                          const Rational& C) {
  if (sgn(theta) <= 0) throw std::domain_error("check_lee_form: theta > 0 required");
  const int n = static_cast<int>(S.size()) - 1;
  if (k < 1 || k >= n) throw std::domain_error("check_lee_form: need 1 <= k < n");

  IneqReport rep;
  rep.name = "lee_form";
  rep.constant_used = C;
  rep.slack_power = 2;

  auto budget = [&](int j, const Rational& base) -> Rational {
    return pow_rat(base, static_cast<unsigned long>(j)) / Rational(factorial(j));
  };
  bool hyp = sq(S[static_cast<size_t>(k)]) <= budget(k, theta) &&
             sq(S[static_cast<size_t>(k) + 1]) <= budget(k + 1, theta);
  if (!hyp) {
    rep.status = "hypotheses_unmet";
    rep.holds = true;  // nothing to conclude; reported as unmet, not failure
    return rep;
  }

  bool first = true;
  Rational ctheta = C * theta;
  for (int l = k; l <= n; ++l) {
    Rational slack = budget(l, ctheta) - sq(S[static_cast<size_t>(l)]);
    if (first || slack < rep.slack) {
      rep.slack = slack;
      rep.worst_index = {l};
      first = false;
    }
  }
  finish_exact(rep);
  return rep;
}

IneqReport check_lee_form(const RootTuple<Rational>& y, int k, const Rational& theta) {
  return check_lee_form(unnormalized(elementary_means(y)), k, theta);
}

IneqReport check_lee_form(const RootTuple<Rational>& y, int k, const Rational& theta,
                          const Rational& C) {
  return check_lee_form(unnormalized(elementary_means(y)), k, theta, C);
}

// ---------------------------------------------------------------------------
// The r-parameterized inequality

namespace {

void validate_new_args(int l, int n) {
  if (l < 1 || l > n) throw std::domain_error("check_new_inequality: 1 <= l <= n required");
}

}  // namespace

IneqReport check_new_inequality(const MeansTuple<Rational>& s, int l, const Rational& r,
                                NewForm form) {
  if (sgn(r) <= 0) throw std::domain_error("check_new_inequality: r > 0 required");
  validate_new_args(l, s.n());

  Rational lhs(0);
  for (int m = 0; m <= l; ++m) {
    unsigned long e = static_cast<unsigned long>(form == NewForm::r1 ? m : l - m);
    lhs += Rational(binomial(l, m)) * abs_rat(s[m]) * pow_rat(r, e);
  }

  IneqReport rep;
  rep.name = form == NewForm::r1 ? "new_r1" : "new_r2";
  rep.worst_index = {l};

  const Rational sl2 = sq(s[l]);
  if (sgn(sl2) == 0) {
    // r1: rhs = 1; r2: rhs = r^l
    Rational rhs = form == NewForm::r1 ? Rational(1) : pow_rat(r, static_cast<unsigned long>(l));
    rep.slack = lhs - rhs;
    rep.slack_power = 1;
    finish_exact(rep);
    return rep;
  }

  Rational t;  // |s_l|^{2/l}
  const Rational r2 = sq(r);
  if (exact_nth_root(sl2, static_cast<unsigned long>(l), t)) {
    Rational base = form == NewForm::r1 ? Rational(1 + t * r2) : Rational(t + r2);
    rep.slack = sq(lhs) - pow_rat(base, static_cast<unsigned long>(l));
    rep.slack_power = 2;
    finish_exact(rep);
    return rep;
  }

  // irrational |s_l|^{2/l}: adaptively refined bracket; terminates because a
  // pure root cannot make both sides equal
  const Rational lhs2 = sq(lhs);
  for (unsigned long bits = 64; bits <= 65536; bits *= 2) {
    RatInterval ti = nth_root_bracket(sl2, static_cast<unsigned long>(l), bits);
    Rational base_lo = form == NewForm::r1 ? Rational(1 + ti.lo * r2) : Rational(ti.lo + r2);
    Rational base_hi = form == NewForm::r1 ? Rational(1 + ti.hi * r2) : Rational(ti.hi + r2);
    Rational rhs2_lo = pow_rat(base_lo, static_cast<unsigned long>(l));
    Rational rhs2_hi = pow_rat(base_hi, static_cast<unsigned long>(l));
    if (lhs2 >= rhs2_hi) {
      rep.slack = lhs2 - rhs2_hi;  // certified lower bound, >= 0
      rep.slack_power = 2;
      rep.holds = true;
      rep.slack_value = to_double(rep.slack);
      return rep;
    }
    if (lhs2 < rhs2_lo) {
      rep.slack = lhs2 - rhs2_lo;  // certified upper bound, < 0
      rep.slack_power = 2;
      rep.holds = false;
      rep.slack_value = to_double(rep.slack);
      return rep;
    }
  }
  throw std::runtime_error("check_new_inequality: comparison undecided at maximum precision");
}

IneqReport check_new_inequality(const MeansTuple<double>& s, int l, double r, NewForm form,
                                double tol) {
  if (!(r > 0)) throw std::domain_error("check_new_inequality: r > 0 required");
  validate_new_args(l, s.n());
  double lhs = 0;
  for (int m = 0; m <= l; ++m)
    lhs += dbinom(l, m) * std::fabs(s[m]) * std::pow(r, form == NewForm::r1 ? m : l - m);
  double t = std::pow(std::fabs(s[l]), 2.0 / l);
  double base = form == NewForm::r1 ? 1 + t * r * r : t + r * r;
  double rhs = std::pow(base, l / 2.0);
  IneqReport rep;
  rep.name = form == NewForm::r1 ? "new_r1" : "new_r2";
  rep.mode = Mode::floating;
  rep.worst_index = {l};
  rep.slack_value = lhs - rhs;
  rep.holds = float_ok(rep.slack_value, lhs, rhs, tol);
  return rep;
}

RSweepResult r_sweep(const MeansTuple<Rational>& s, int l, const std::vector<Rational>& grid,
                     NewForm form) {
  if (grid.empty()) throw std::domain_error("r_sweep: empty grid");
  RSweepResult out;
  bool first = true;
  for (const Rational& r : grid) {
    IneqReport rep = check_new_inequality(s, l, r, form);
    // the comparison scale is fixed by (s, l), so slacks are comparable
    if (first || rep.slack < out.worst.slack) {
      out.worst = rep;
      out.r_at_min = r;
      first = false;
    }
  }
  return out;
}

}  // namespace symm
