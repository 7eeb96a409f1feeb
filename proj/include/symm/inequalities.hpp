#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symm/constants.hpp"
#include "symm/tuples.hpp"

namespace symm {

/// Verdict plus signed slack for one inequality check. Slack is oriented so
/// that >= 0 means the inequality holds; in exact mode the verdict is
/// certified and the sign of `slack` always matches it. Where a comparison
/// involves fractional powers, both sides are raised to the power recorded
/// in `slack_power` first, so the reported slack lives on that scale (an
/// exact 0 still means exact equality). When an irrational side had to be
/// bracketed, the reported slack is a certified bound of the correct sign.
struct IneqReport {
  std::string name;
  bool holds = false;
  std::vector<long> worst_index;  // k, (k', l), l, or the lee l
  Mode mode = Mode::exact;
  Rational slack = 0;       // exact mode
  long slack_power = 1;     // exponent scale of `slack`
  double slack_value = 0;   // float mode slack (exact mode: double(slack))
  Rational constant_used = 0;
  std::string status = "checked";  // "checked" | "hypotheses_unmet"
};

/// s_{k-1} s_{k+1} <= s_k^2 for 1 <= k < n. Requires n >= 2.
IneqReport check_newton(const MeansTuple<Rational>& s);
IneqReport check_newton(const MeansTuple<double>& s, double tol = 1e-9);

/// s_1 >= s_2^{1/2} >= ... >= s_n^{1/n}; valid for non-negative roots.
/// When roots are supplied they are checked; means-only input requires all
/// s_k >= 0 (equivalent for attainable tuples).
IneqReport check_maclaurin(const MeansTuple<Rational>& s);
IneqReport check_maclaurin(const RootTuple<Rational>& y);
IneqReport check_maclaurin(const MeansTuple<double>& s, double tol = 1e-9);
IneqReport check_maclaurin(const RootTuple<double>& y, double tol = 1e-9);

/// 4 (s_{k+2}^2 - s_{k+1} s_{k+3}) (s_{k+1}^2 - s_k s_{k+2})
///   >= (s_{k+1} s_{k+2} - s_k s_{k+3})^2 for 0 <= k <= n-3. Requires n >= 3.
IneqReport check_rosset(const MeansTuple<Rational>& s);
IneqReport check_rosset(const MeansTuple<double>& s, double tol = 1e-9);

/// |s_n|^{2/n} <= (1/n) sum y_i^2.
IneqReport check_amgm_bound(const RootTuple<Rational>& y);
IneqReport check_amgm_bound(const RootTuple<double>& y, double tol = 1e-9);

/// |s_l|^{2/l} <= l s_1^2 - (l-1) s_2 for 2 <= l <= n.
IneqReport check_step_bound(const MeansTuple<Rational>& s, int l);
IneqReport check_step_bound(const MeansTuple<double>& s, int l, double tol = 1e-9);

/// |s_l|^{1/l} <= C l^{1/2} max(|s_k|^{1/k}, |s_{k+1}|^{1/(k+1)}) for
/// 1 <= k <= l <= n, k < n. Default C is the c_prev() upper bracket.
IneqReport check_prev_bound(const MeansTuple<Rational>& s, int k, int l);
IneqReport check_prev_bound(const MeansTuple<Rational>& s, int k, int l, const Rational& C);
IneqReport check_prev_bound(const MeansTuple<double>& s, int k, int l, double C = 0,
                            double tol = 1e-9);

/// |s_l|^{1/l} <= C max_{k' = k, k+1} (l/k')^{1/2} |s_{k'}|^{1/k'} for
/// 1 <= k < l <= n. Default C is the c_main() upper bracket.
IneqReport check_main(const MeansTuple<Rational>& s, int k, int l);
IneqReport check_main(const MeansTuple<Rational>& s, int k, int l, const Rational& C);
IneqReport check_main(const MeansTuple<double>& s, int k, int l, double C = 0,
                      double tol = 1e-9);

/// Factorial-normalized form on S_k = C(n,k) s_k: if |S_k|^2 <= theta^k/k!
/// and |S_{k+1}|^2 <= theta^{k+1}/(k+1)!, then |S_l|^2 <= (C theta)^l / l!
/// for k <= l <= n. Unmet hypotheses yield status "hypotheses_unmet", not a
/// failure. Default C is lee_default_c().
IneqReport check_lee_form(const std::vector<Rational>& S, int k, const Rational& theta);
IneqReport check_lee_form(const std::vector<Rational>& S, int k, const Rational& theta,
                          const Rational& C);
IneqReport check_lee_form(const RootTuple<Rational>& y, int k, const Rational& theta);
IneqReport check_lee_form(const RootTuple<Rational>& y, int k, const Rational& theta,
                          const Rational& C);

enum class NewForm { r1, r2 };

/// Form r1: sum_{m=0}^{l} C(l,m) |s_m| r^m >= (1 + |s_l|^{2/l} r^2)^{l/2}.
/// Form r2: sum_{m=0}^{l} C(l,m) |s_m| r^{l-m} >= (|s_l|^{2/l} + r^2)^{l/2}.
/// Requires r > 0 and 1 <= l <= n. Exact mode compares squared l-th powers,
/// staying rational whenever |s_l|^{2/l} is rational and otherwise deciding
/// via adaptively refined root brackets.
IneqReport check_new_inequality(const MeansTuple<Rational>& s, int l, const Rational& r,
                                NewForm form = NewForm::r1);
IneqReport check_new_inequality(const MeansTuple<double>& s, int l, double r,
                                NewForm form = NewForm::r1, double tol = 1e-9);

struct RSweepResult {
  IneqReport worst;   // minimal-slack report across the grid
  Rational r_at_min;  // grid point achieving it
};

/// check_new_inequality across a positive grid; returns the worst slack and
/// the minimizing r. Throws on an empty grid.
RSweepResult r_sweep(const MeansTuple<Rational>& s, int l, const std::vector<Rational>& grid,
                     NewForm form = NewForm::r1);

}  // namespace symm
