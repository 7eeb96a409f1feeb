#include <doctest.h>

#include <cmath>

#include "test_util.hpp"

using namespace symm;
using namespace testutil;

TEST_CASE("binomial: values and domain") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(1000, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK_THROWS_AS(binomial(5, 7), std::domain_error);
}

TEST_CASE("binomial: no overflow up to n = 1000 (row sums to 2^n)") {
  Int sum(0);
  for (unsigned long k = 0; k <= 1000; ++k) sum += binomial(1000, k);
  CHECK(sum == pow_int(Int(2), 1000));
}

TEST_CASE("binomial: n^k/k^k <= C(n,k) <= n^k/k! for 1 <= k <= n <= 200") {
  for (unsigned long n = 1; n <= 200; ++n) {
    for (unsigned long k = 1; k <= n; ++k) {
      Int b = binomial(n, k);
      Int nk = pow_int(Int(n), k);
      CHECK(nk <= b * pow_int(Int(k), k));
      CHECK(b * factorial(k) <= nk);
    }
  }
  // the (10,3) instance spelled out: 10^3/3^3 <= 120 <= 10^3/3!
  CHECK(Int(1000) <= Int(120) * 27);
  CHECK(Int(120) * 6 <= Int(1000));
}

TEST_CASE("weak Stirling: k^k/e^k <= k! <= k^k for 1 <= k <= 200") {
  for (unsigned long k = 1; k <= 200; ++k) {
    Int kk = pow_int(Int(k), k);
    Int kf = factorial(k);
    CHECK(kf <= kk);
    // partial sums give the rational lower bound sum_{j<=k} k^j/j! <= e^k,
    // so k^k <= k! * sum suffices for k^k <= k! e^k
    Rational partial(0);
    for (unsigned long j = 0; j <= k; ++j)
      partial += make_frac(pow_int(Int(k), j), factorial(j));
    CHECK(Rational(kk) <= Rational(kf) * partial);
  }
}

TEST_CASE("elementary_means: all-ones, (2,3), (-1,0,1)") {
  for (int n : {1, 5, 9, 20}) {
    auto s = elementary_means(RootTuple<Rational>(std::vector<Rational>(n, Rational(1))));
    for (int k = 0; k <= n; ++k) CHECK(s[k] == 1);
  }
  auto s23 = means_of({"2", "3"});
  CHECK(s23[0] == 1);
  CHECK(s23[1] == Q("5/2"));
  CHECK(s23[2] == 6);

  auto s3 = means_of({"-1", "0", "1"});
  CHECK(s3[0] == 1);
  CHECK(s3[1] == 0);
  CHECK(s3[2] == Q("-1/3"));
  CHECK(s3[3] == 0);
}

TEST_CASE("elementary_means_bruteforce: examples and refusal") {
  auto s23 = elementary_means_bruteforce(roots({"2", "3"}));
  CHECK(s23[1] == Q("5/2"));
  CHECK(s23[2] == 6);

  auto empty = elementary_means_bruteforce(RootTuple<Rational>{});
  CHECK(empty.n() == 0);
  CHECK(empty[0] == 1);

  auto pm = elementary_means_bruteforce(roots({"-1", "1"}));
  CHECK(pm[1] == 0);
  CHECK(pm[2] == -1);

  RootTuple<Rational> big(std::vector<Rational>(21, Rational(1)));
  CHECK_THROWS_AS(elementary_means_bruteforce(big), std::domain_error);
}

TEST_CASE("oracle equivalence: recurrence == subset enumeration, n <= 12") {
  for (int n = 0; n <= 12; ++n) {
    for (Dist dist : all_dists()) {
      auto [y, s] = random_attainable(n, 1000u + static_cast<unsigned>(n), dist);
      auto oracle = elementary_means_bruteforce(y);
      REQUIRE(s.n() == oracle.n());
      for (int k = 0; k <= n; ++k) CHECK(s[k] == oracle[k]);
    }
  }
}

TEST_CASE("oracle equivalence in float mode: relative error <= 1e-12") {
  for (int n = 1; n <= 12; ++n) {
    auto [y, s] = random_attainable_float(n, 77u + static_cast<unsigned>(n), Dist::gauss);
    auto oracle = elementary_means_bruteforce(y);
    for (int k = 0; k <= n; ++k) {
      double scale = std::max({1.0, std::fabs(s[k]), std::fabs(oracle[k])});
      CHECK(std::fabs(s[k] - oracle[k]) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("means_to_poly: sign pattern and expansions") {
  auto p1 = means_to_poly(tuple({"1", "0", "1"}));
  CHECK(p1.coeffs == std::vector<Rational>{1, 0, 1});  // z^2 + 1

  auto p2 = means_to_poly(tuple({"1", "5/2", "6"}));
  CHECK(p2.coeffs == std::vector<Rational>{1, -5, 6});  // (z-2)(z-3)

  auto p3 = means_to_poly(tuple({"1", "0", "-1/3", "0", "1"}));
  CHECK(p3.coeffs == std::vector<Rational>{1, 0, -2, 0, 1});  // (z^2-1)^2
}

TEST_CASE("poly_to_means: inverse, n=1, non-monic rejected") {
  auto m1 = poly_to_means(PolyCoeffs<Rational>({Rational(1), Rational(0), Rational(1)}));
  CHECK(m1.means == std::vector<Rational>{1, 0, 1});

  auto m2 = poly_to_means(PolyCoeffs<Rational>({Rational(1), Rational(-5), Rational(6)}));
  CHECK(m2.means == std::vector<Rational>{1, Q("5/2"), 6});

  auto m3 = poly_to_means(PolyCoeffs<Rational>({Rational(1), Rational(-7)}));
  CHECK(m3.means == std::vector<Rational>{1, 7});

  PolyCoeffs<Rational> notmonic({Rational(2), Rational(0)});
  CHECK_THROWS_AS(poly_to_means(notmonic), std::domain_error);
}

TEST_CASE("round trip: poly_to_means(means_to_poly(s)) == s exactly") {
  for (int n = 0; n <= 14; ++n) {
    auto [y, s] = random_attainable(n, 4242u + static_cast<unsigned>(n), Dist::gauss);
    auto back = poly_to_means(means_to_poly(s));
    REQUIRE(back.n() == s.n());
    for (int k = 0; k <= n; ++k) CHECK(back[k] == s[k]);
  }
}

TEST_CASE("unnormalized: S_k = C(n,k) s_k") {
  auto u1 = unnormalized(tuple({"1", "1", "1"}));
  CHECK(u1 == std::vector<Rational>{1, 2, 1});

  auto u2 = unnormalized(tuple({"1", "5/2", "6"}));
  CHECK(u2 == std::vector<Rational>{1, 5, 6});

  auto u3 = unnormalized(tuple({"1", "0", "-1/3", "0", "1"}));
  CHECK(u3 == std::vector<Rational>{1, 0, -2, 0, 1});
}

TEST_CASE("power_sum_2: examples and the identity on random tuples") {
  CHECK(power_sum_2(means_of({"2", "3"})) == 13);

  auto ones = elementary_means(RootTuple<Rational>(std::vector<Rational>(5, Rational(1))));
  CHECK(power_sum_2(ones) == 5);

  CHECK(power_sum_2(means_of({"-1", "1"})) == 2);

  CHECK_THROWS_AS(power_sum_2(tuple({"1", "3"})), std::domain_error);

  for (int n = 2; n <= 16; ++n) {
    for (Dist dist : all_dists()) {
      auto [y, s] = random_attainable(n, 99u + static_cast<unsigned>(n), dist);
      Rational sum(0);
      for (const Rational& r : y.roots) sum += r * r;
      CHECK(power_sum_2(s) == sum);
    }
  }
}

TEST_CASE("extremal_family: closed form and consistency with +-1 roots") {
  auto e2 = extremal_family<Rational>(2);
  CHECK(e2.means == std::vector<Rational>{1, 0, -1});

  auto e4 = extremal_family<Rational>(4);
  CHECK(e4.means == std::vector<Rational>{1, 0, Q("-1/3"), 0, 1});
  CHECK(e4[1] == 0);
  CHECK(e4[3] == 0);

  CHECK_THROWS_AS(extremal_family<Rational>(5), std::domain_error);
  CHECK_THROWS_AS(extremal_family<Rational>(0), std::domain_error);

  for (int n = 2; n <= 40; n += 2) {
    std::vector<Rational> r(n, Rational(1));
    for (int i = n / 2; i < n; ++i) r[i] = -1;
    auto s = elementary_means(RootTuple<Rational>(std::move(r)));
    auto fam = extremal_family<Rational>(n);
    for (int k = 0; k <= n; ++k) CHECK(s[k] == fam[k]);
  }
}

TEST_CASE("homogeneity: means of lambda*y scale by lambda^k") {
  for (int n : {3, 7, 11}) {
    auto [y, s] = random_attainable(n, 13u + static_cast<unsigned>(n), Dist::heavy_tail);
    for (const char* lt : {"2", "-3", "1/7"}) {
      Rational lambda = Q(lt);
      std::vector<Rational> scaled;
      for (const Rational& r : y.roots) scaled.push_back(r * lambda);
      auto s2 = elementary_means(RootTuple<Rational>(std::move(scaled)));
      Rational lp(1);
      for (int k = 0; k <= n; ++k) {
        CHECK(s2[k] == s[k] * lp);
        lp *= lambda;
      }
    }
  }
}

TEST_CASE("MeansTuple: s_0 must be 1") {
  CHECK_THROWS_AS(MeansTuple<Rational>(std::vector<Rational>{Rational(2)}), std::domain_error);
  CHECK_THROWS_AS(MeansTuple<Rational>(std::vector<Rational>{}), std::domain_error);
}
