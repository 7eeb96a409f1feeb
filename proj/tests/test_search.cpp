#include <doctest.h>

#include <cmath>

#include "symm/io_json.hpp"
#include "symm/search.hpp"
#include "test_util.hpp"

using namespace symm;
using namespace testutil;

TEST_CASE("objective: all-ones, zero numerator, domain errors") {
  for (int n : {4, 9, 16}) {
    RootTuple<double> y(std::vector<double>(n, 1.0));
    double val = objective(y, 1, n);
    CHECK(val == doctest::Approx(1.0 / std::sqrt(n)).epsilon(1e-12));
  }

  // extremal family, odd l has s_l = 0
  auto y = pm_one_start(4);
  CHECK(objective(y, 1, 3) == 0.0);

  // all-zero roots: numerator and denominator both vanish
  RootTuple<double> zeros(std::vector<double>(5, 0.0));
  CHECK(objective(zeros, 1, 4) == 0.0);

  CHECK_THROWS_AS(objective(y, 0, 3), std::domain_error);
  CHECK_THROWS_AS(objective(y, 2, 2), std::domain_error);
  CHECK_THROWS_AS(objective(y, 1, 5), std::domain_error);
}

TEST_CASE("objective: scale invariance to 1e-12 relative") {
  for (unsigned i = 0; i < 30; ++i) {
    int n = 4 + static_cast<int>(mix64(i) % 10);
    auto [y, s] = random_attainable_float(n, 1234 + i, all_dists()[i % 3]);
    int k = 1 + static_cast<int>(mix64(i + 3) % (n - 1));
    int l = std::min(n, k + 1 + static_cast<int>(mix64(i + 4) % (n - k)));
    double base = objective(y, k, l);
    for (double lambda : {2.0, -3.0, 0.125}) {
      std::vector<double> scaled;
      for (double r : y.roots) scaled.push_back(lambda * r);
      double v = objective(RootTuple<double>(std::move(scaled)), k, l);
      if (base == 0.0)
        CHECK(v == 0.0);
      else
        CHECK(std::fabs(v - base) <= 1e-12 * base);
    }
  }
}

TEST_CASE("objective_bracket: encloses the float objective") {
  for (unsigned i = 0; i < 10; ++i) {
    int n = 6;
    auto [yq, sq] = random_attainable(n, 555 + i, Dist::gauss);
    std::vector<double> yd;
    for (const Rational& r : yq.roots) yd.push_back(to_double(r));
    auto ob = objective_bracket(yq, 2, 6);
    REQUIRE_FALSE(ob.anomaly);
    double approx = objective(RootTuple<double>(std::move(yd)), 2, 6);
    CHECK(to_double(ob.value.lo) <= approx * (1 + 1e-9) + 1e-12);
    CHECK(approx * (1 - 1e-9) - 1e-12 <= to_double(ob.value.hi));
  }
  // exact zero numerator
  std::vector<Rational> pm{1, -1, 1, -1};
  auto ob = objective_bracket(RootTuple<Rational>(pm), 1, 3);
  CHECK_FALSE(ob.anomaly);
  CHECK(ob.value.hi == 0);
}

TEST_CASE("local_search: budget 1 evaluates the start; improvements only") {
  SearchConfig cfg;
  cfg.n = 8;
  cfg.k = 2;
  cfg.l = 8;
  cfg.budget = 1;
  cfg.seed = 3;
  auto start = pm_one_start(8);
  auto rec = local_search(start, cfg);
  CHECK(rec.iterations == 1);
  CHECK(rec.roots == start.roots);
  CHECK(rec.ratio == doctest::Approx(objective(start, 2, 8)));

  cfg.budget = 2000;
  auto rec2 = local_search(start, cfg);
  CHECK(rec2.ratio >= rec.ratio);  // accept-only-improvements

  auto rec3 = local_search(start, cfg);
  CHECK(rec3.roots == rec2.roots);  // deterministic
  CHECK(rec3.iterations == rec2.iterations);
}

TEST_CASE("multi_start_search: restarts=1 on even n reduces to the +-1 start") {
  SearchConfig cfg;
  cfg.n = 6;
  cfg.k = 2;
  cfg.l = 6;
  cfg.budget = 1;
  cfg.restarts = 1;
  cfg.seed = 9;
  auto res = multi_start_search(cfg);
  REQUIRE(res.records.size() == 1);
  CHECK(res.records[0].roots == pm_one_start(6).roots);
}

TEST_CASE("multi_start_search: best >= +-1 start, exact verification, determinism") {
  SearchConfig cfg;
  cfg.n = 10;
  cfg.k = 2;
  cfg.l = 10;
  cfg.budget = 400;
  cfg.restarts = 5;
  cfg.seed = 17;
  auto res = multi_start_search(cfg);
  REQUIRE(res.records.size() == 5);
  double pm1 = objective(pm_one_start(10), 2, 10);
  CHECK(res.best.ratio >= pm1 * (1 - 1e-12));
  CHECK(res.best.exact_verified);
  CHECK_FALSE(res.best.anomaly);
  CHECK(res.best.ratio <= to_double(c_main().hi));
  for (size_t i = 0; i < res.records.size(); ++i)
    CHECK(res.records[i].timestamp == static_cast<long>(i));

  auto res2 = multi_start_search(cfg);
  std::string a = search_records_jsonl(cfg, res.records, {});
  std::string b = search_records_jsonl(cfg, res2.records, {});
  CHECK(a == b);  // byte-identical output per config
}

TEST_CASE("kev_table: n = 4 rows and the frozen bracket") {
  auto rows = kev_table({4});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 4);
  CHECK(rows[0].k == 2);
  CHECK(rows[0].normalized_ratio == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(rows[1].k == 4);
  CHECK(rows[1].normalized_ratio == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(kev_table({5}), std::domain_error);

  // bracket membership, exactly: lo^{2k} <= s_k^2 (n/k)^k <= hi^{2k}
  for (int n : {10, 20, 40}) {
    for (int k = 2; k <= n; k += 2) {
      Rational v = kev_ratio_pow2k(n, k);
      CHECK(pow_rat(kev_bracket_lo(), 2ul * k) <= v);
      CHECK(v <= pow_rat(kev_bracket_hi(), 2ul * k));
    }
  }
}

TEST_CASE("+-1 start is a witness above the bracket floor") {
  for (int n = 10; n <= 40; n += 2) {
    auto y = pm_one_start(n);
    for (int k = 2; k < n; k += 2) {
      double val = objective(y, k, n);
      CHECK(val >= to_double(kev_bracket_lo()) - 1e-9);
    }
  }
}

TEST_CASE("SearchConfig validation") {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.k = 2;
  cfg.l = 2;  // k >= l
  CHECK_THROWS_AS(validate(cfg), std::domain_error);
  cfg.l = 4;
  cfg.budget = 0;
  CHECK_THROWS_AS(validate(cfg), std::domain_error);
}
