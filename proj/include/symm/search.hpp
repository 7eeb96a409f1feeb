#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symm/attainability.hpp"
#include "symm/inequalities.hpp"

namespace symm {

struct SearchConfig {
  int n = 0, k = 0, l = 0;
  long budget = 1;       // objective evaluations per restart
  int restarts = 1;
  uint64_t seed = 0;
  Dist dist = Dist::gauss;
  double step_init = 0.5;
  double step_decay = 0.5;  // applied after a full failed sweep
};

void validate(const SearchConfig& cfg);

/// One search outcome. `ratio` is objective(roots, k, l) recomputed verbatim
/// at record time. `timestamp` is a logical emission index (restart order),
/// which keeps persisted output byte-identical per config. Records whose
/// certified ratio bracket would exceed the main-inequality constant are
/// flagged `anomaly`, never dropped.
struct SearchRecord {
  std::vector<double> roots;
  double ratio = 0;
  int k = 0, l = 0, n = 0;
  uint64_t seed = 0;
  long iterations = 0;
  long timestamp = 0;
  bool anomaly = false;
  bool exact_verified = false;
  std::string ratio_exact_lo, ratio_exact_hi;  // set when exact_verified
};

/// |s_l|^{1/l} / max_{k' = k, k+1} (l/k')^{1/2} |s_{k'}|^{1/k'}.
/// Returns +inf when the denominator vanishes but |s_l| > 0 (an anomaly
/// candidate that must be exact-verified, never propagated as a maximum),
/// and 0 when both vanish.
double objective(const RootTuple<double>& y, int k, int l);

/// Certified bracket of the objective on an exact tuple. Empty-denominator
/// cases are reported through `anomaly`.
struct ObjectiveBracket {
  RatInterval value{Rational(0), Rational(0)};
  bool anomaly = false;  // denominator exactly 0 with |s_l| > 0
};
ObjectiveBracket objective_bracket(const RootTuple<Rational>& y, int k, int l,
                                   unsigned long bits = 128);

/// Coordinate-wise pattern search: perturb each root by +-step, accept
/// improvements, decay the step after a sweep with no acceptance, stop at
/// step < 2^-20 or budget exhaustion. Deterministic in (start, cfg).
SearchRecord local_search(const RootTuple<double>& start, const SearchConfig& cfg);

struct SearchResult {
  std::vector<SearchRecord> records;  // one per restart, in restart order
  SearchRecord best;
};

/// cfg.restarts independent starts: the balanced +-1 tuple (when n is even),
/// the all-ones tuple, then seeded draws from cfg.dist. Candidates within 1%
/// of the best ratio are re-scored in exact arithmetic (snapped roots) and
/// checked against the main inequality before being persisted.
SearchResult multi_start_search(const SearchConfig& cfg);

struct KevRow {
  int n = 0, k = 0;
  double normalized_ratio = 0;
};

/// |s_k|^{1/k} (n/k)^{1/2} on the extremal family, for even k <= n.
std::vector<KevRow> kev_table(const std::vector<int>& n_list);

/// Exact value of the normalized ratio raised to the 2k-th power:
/// s_k^2 (n/k)^k. Lets callers compare against bracket endpoints exactly.
Rational kev_ratio_pow2k(int n, int k);

/// Bracket for the normalized ratio, fixed by an exact sweep over even
/// n <= 200 (attained: minimum 0.63247... at n=200, k=16; maximum 1 at k=n).
const Rational& kev_bracket_lo();  // 63/100
const Rational& kev_bracket_hi();  // 1

/// The balanced +-1 start (n even: n/2 copies of +1 then n/2 of -1).
RootTuple<double> pm_one_start(int n);

}  // namespace symm
