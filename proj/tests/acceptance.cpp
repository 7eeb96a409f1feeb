// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code; exact-mode slack
// comparisons are certified rational arithmetic.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "symm/io_json.hpp"
#include "symm/search.hpp"

using namespace symm;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int idx, const std::string& label, bool pass, double secs, double limit,
            const std::string& detail = "") {
  bool ok = pass && (limit <= 0 || secs < limit);
  std::printf("[%s] %d. %s (%.2f s%s)%s%s\n", ok ? "PASS" : "FAIL", idx, label.c_str(), secs,
              limit > 0 ? (", limit " + std::to_string(static_cast<int>(limit)) + " s").c_str()
                        : "",
              detail.empty() ? "" : " ", detail.c_str());
  if (!ok) ++g_failures;
}

Dist dist_of(unsigned i) {
  static const Dist d[3] = {Dist::gauss, Dist::rademacher, Dist::heavy_tail};
  return d[i % 3];
}

// 1. elementary_means == brute-force subset enumeration, 500 tuples, n <= 12
void criterion_1() {
  Timer t;
  bool pass = true;
  long mismatches = 0;
  for (unsigned i = 0; i < 500; ++i) {
    int n = static_cast<int>(mix64(i) % 13);  // 0..12
    auto [y, s] = random_attainable(n, 10000 + i, dist_of(i));
    auto oracle = elementary_means_bruteforce(y);
    for (int k = 0; k <= n; ++k)
      if (!(s[k] == oracle[k])) ++mismatches;
  }
  pass = mismatches == 0;
  report(1, "oracle equivalence: 500 tuples, n <= 12, exact equality", pass, t.seconds(), 10,
         pass ? "" : std::to_string(mismatches) + " mismatches");
}

// 2. sharpness: form r1 on the extremal family, slack exactly 0
void criterion_2() {
  Timer t;
  long bad = 0;
  const char* rs[] = {"1/4", "1/2", "1", "2", "4"};
  for (int n = 2; n <= 40; n += 2) {
    auto fam = extremal_family<Rational>(n);
    for (const char* rt : rs) {
      auto rep = check_new_inequality(fam, n, parse_rational(rt), NewForm::r1);
      if (!rep.holds || !(rep.slack == 0)) ++bad;
    }
  }
  report(2, "sharpness: r1 slack exactly 0 on extremal family, even n <= 40, 5 r values",
         bad == 0, t.seconds(), 30, bad ? std::to_string(bad) + " nonzero slacks" : "");
}

// 3. inequality fuzz: 10^4 random attainable tuples, n <= 16, zero violations
void criterion_3() {
  Timer t;
  long violations = 0;
  long checks = 0;
  const Rational cp = c_prev().hi;
  const Rational cm = c_main().hi;
  for (unsigned i = 0; i < 10000; ++i) {
    int n = 2 + static_cast<int>(mix64(20000 + i) % 15);  // 2..16
    auto [y, s] = random_attainable(n, 30000 + i, dist_of(i));

    auto expect = [&](const IneqReport& rep) {
      ++checks;
      if (!rep.holds || sgn(rep.slack) < 0) ++violations;
    };

    expect(check_newton(s));
    if (n >= 3) expect(check_rosset(s));
    expect(check_amgm_bound(y));
    for (int l = 2; l <= n; ++l) expect(check_step_bound(s, l));
    for (int k = 1; k < n; ++k)
      for (int l = k; l <= n; ++l) expect(check_prev_bound(s, k, l, cp));
    for (int k = 1; k < n; ++k)
      for (int l = k + 1; l <= n; ++l) expect(check_main(s, k, l, cm));
  }
  report(3,
         "fuzz: newton/rosset/step/amgm/prev/main on 10^4 tuples, n <= 16, exact slack >= 0 "
         "(" + std::to_string(checks) + " checks)",
         violations == 0, t.seconds(), 300,
         violations ? std::to_string(violations) + " violations" : "");
}

// 4. attainability: real-rooted => true; injected complex pair => false
void criterion_4() {
  Timer t;
  long wrong = 0, errors = 0;
  for (unsigned i = 0; i < 1000; ++i) {
    try {
      // real-rooted, possibly with repeated roots
      int base = 1 + static_cast<int>(mix64(40000 + i) % 7);
      auto [y, s] = random_attainable(base, 50000 + i, dist_of(i));
      std::vector<Rational> roots = y.roots;
      int extra = static_cast<int>(mix64(60000 + i) % 4);  // up to 3 duplicates
      for (int e = 0; e < extra && roots.size() < 10; ++e)
        roots.push_back(roots[mix64(70000 + i + static_cast<unsigned>(e)) % roots.size()]);
      auto means = elementary_means(RootTuple<Rational>(roots));
      if (!is_attainable(means).attainable) ++wrong;

      // same polynomial times a complex-conjugate quadratic z^2 + a z + b
      Rational a = make_frac(static_cast<long>(mix64(80000 + i) % 9) - 4, 2);
      Rational b = a * a / 4 + make_frac(static_cast<long>(mix64(90000 + i) % 8) + 1, 4);
      PolyCoeffs<Rational> block(std::vector<Rational>{Rational(1), a, b});
      auto q = poly_mul(means_to_poly(means), block);
      if (is_attainable(poly_to_means(q)).attainable) ++wrong;
    } catch (const std::exception&) {
      ++errors;
    }
  }
  report(4, "attainability: 10^3 real-rooted true / 10^3 complex-pair false, zero errors",
         wrong == 0 && errors == 0, t.seconds(), 0,
         wrong + errors ? std::to_string(wrong) + " wrong, " + std::to_string(errors) + " errors"
                        : "");
}

// 5. symmetry laws
void criterion_5() {
  Timer t;
  long bad = 0;
  for (unsigned i = 0; i < 1000; ++i) {
    int n = 2 + static_cast<int>(mix64(100000 + i) % 9);  // 2..10
    auto [y, s] = random_attainable(n, 110000 + i, dist_of(i));

    // truncation closure: every prefix attainable
    for (int l = 1; l <= n; ++l)
      if (!is_attainable(truncate(s, l)).attainable) ++bad;

    // reflect o reflect is the identity (scale-normalized with c = 1)
    if (sgn(s[n]) != 0) {
      auto rr = reflect(reflect(s));
      for (int k = 0; k <= n; ++k)
        if (!(rr[k] == s[k])) ++bad;
    }

    // scale covariance of the main-inequality verdict
    int k = 1 + static_cast<int>(mix64(120000 + i) % (n - 1));
    bool base = check_main(s, k, n).holds;
    for (const char* lt : {"-2", "1/3", "10"})
      if (check_main(scale(s, parse_rational(lt)), k, n).holds != base) ++bad;
  }
  report(5, "symmetry laws: truncation closure, double reflection, scale covariance",
         bad == 0, t.seconds(), 0, bad ? std::to_string(bad) + " failures" : "");
}

// 6. normalized ratios on the extremal family stay in the frozen bracket
void criterion_6() {
  Timer t;
  long outside = 0;
  for (int n = 10; n <= 200; n += 2) {
    for (int k = 2; k <= n; k += 2) {
      Rational v = kev_ratio_pow2k(n, k);
      if (!(pow_rat(kev_bracket_lo(), 2ul * static_cast<unsigned long>(k)) <= v &&
            v <= pow_rat(kev_bracket_hi(), 2ul * static_cast<unsigned long>(k))))
        ++outside;
    }
  }
  report(6, "kev table: normalized ratios within [63/100, 1] for even n in 10..200",
         outside == 0, t.seconds(), 0, outside ? std::to_string(outside) + " outside" : "");
}

// 7. search sanity: determinism, exact re-verification, best >= +-1 start
void criterion_7() {
  Timer t;
  SearchConfig cfg;
  cfg.n = 20;
  cfg.k = 4;
  cfg.l = 20;
  cfg.budget = 10000;
  cfg.restarts = 16;
  cfg.seed = 7;

  auto res1 = multi_start_search(cfg);
  auto res2 = multi_start_search(cfg);
  std::string out1 = search_records_jsonl(cfg, res1.records, {});
  std::string out2 = search_records_jsonl(cfg, res2.records, {});
  bool deterministic = out1 == out2;

  // every persisted record re-verifies exactly under the main inequality
  long unverified = 0;
  for (const SearchRecord& rec : res1.records) {
    auto yq = snap_roots(RootTuple<double>(rec.roots));
    auto s = elementary_means(yq);
    if (!check_main(s, rec.k, rec.l).holds) ++unverified;
    auto ob = objective_bracket(yq, rec.k, rec.l);
    if (ob.anomaly || !(ob.value.lo <= c_main().hi)) ++unverified;
    if (rec.anomaly) ++unverified;
  }

  double pm1 = objective(pm_one_start(20), 4, 20);
  bool best_ok = res1.best.ratio >= pm1 * (1 - 1e-12);

  bool pass = deterministic && unverified == 0 && best_ok;
  std::string detail;
  if (!deterministic) detail += "nondeterministic ";
  if (unverified) detail += std::to_string(unverified) + " records failed re-verification ";
  if (!best_ok) detail += "best below +-1 start";
  report(7, "search sanity: n=20 k=4 l=20, budget 10^4, 16 restarts", pass, t.seconds(), 120,
         detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
