#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "symm/binomial.hpp"
#include "symm/tuples.hpp"

namespace symm {

namespace detail {

template <class S>
struct scalar_ops;

template <>
struct scalar_ops<Rational> {
  static Rational binom(int n, int k) { return Rational(binomial(n, k)); }
  static Rational from_rat(const Rational& q) { return q; }
};

template <>
struct scalar_ops<double> {
  static double binom(int n, int k) { return binomial(n, k).get_d(); }
  static double from_rat(const Rational& q) { return q.get_d(); }
};

}  // namespace detail

/// s_k(y) for k = 0..n via the Vieta recurrence: prepend one root at a time
/// to the unnormalized coefficient vector, then divide by C(n,k). O(n^2),
/// exact in Rational mode.
template <class S>
MeansTuple<S> elementary_means(const RootTuple<S>& y) {
  const int n = y.n();
  std::vector<S> e(static_cast<size_t>(n) + 1, S(0));
  e[0] = S(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j >= 1; --j) e[j] += y.roots[i] * e[j - 1];
  for (int k = 1; k <= n; ++k) e[k] /= detail::scalar_ops<S>::binom(n, k);
  return MeansTuple<S>(std::move(e));
}

/// Same contract as elementary_means, by explicit enumeration of all
/// k-subsets. Test oracle only; refuses n > 20.
template <class S>
MeansTuple<S> elementary_means_bruteforce(const RootTuple<S>& y) {
  const int n = y.n();
  if (n > 20) throw std::domain_error("elementary_means_bruteforce: n > 20 refused");
  std::vector<S> e(static_cast<size_t>(n) + 1, S(0));
  // depth-first subset enumeration with an incremental prefix product
  auto rec = [&](auto&& self, int next, int count, const S& prod) -> void {
    e[count] += prod;
    for (int j = next; j < n; ++j) self(self, j + 1, count + 1, S(prod * y.roots[j]));
  };
  rec(rec, 0, 0, S(1));
  for (int k = 1; k <= n; ++k) e[k] /= detail::scalar_ops<S>::binom(n, k);
  return MeansTuple<S>(std::move(e));
}

/// Monic polynomial with coefficient (-1)^k C(n,k) s_k on z^{n-k}.
template <class S>
PolyCoeffs<S> means_to_poly(const MeansTuple<S>& s) {
  const int n = s.n();
  std::vector<S> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    S v = detail::scalar_ops<S>::binom(n, k) * s[k];
    c[k] = (k % 2) ? S(-v) : v;
  }
  return PolyCoeffs<S>(std::move(c));
}

/// Left inverse of means_to_poly. Throws std::domain_error on non-monic input.
template <class S>
MeansTuple<S> poly_to_means(const PolyCoeffs<S>& p) {
  if (!p.monic()) throw std::domain_error("poly_to_means: polynomial is not monic");
  const int n = p.degree();
  std::vector<S> m(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    S v = p.coeffs[k] / detail::scalar_ops<S>::binom(n, k);
    m[k] = (k % 2) ? S(-v) : v;
  }
  return MeansTuple<S>(std::move(m));
}

/// S_k = C(n,k) s_k for k = 0..n.
template <class S>
std::vector<S> unnormalized(const MeansTuple<S>& s) {
  const int n = s.n();
  std::vector<S> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[k] = detail::scalar_ops<S>::binom(n, k) * s[k];
  return out;
}

/// n^2 s_1^2 - 2 C(n,2) s_2, which equals sum y_i^2 for any underlying roots.
template <class S>
S power_sum_2(const MeansTuple<S>& s) {
  const int n = s.n();
  if (n < 2) throw std::domain_error("power_sum_2: n >= 2 required");
  return S(n) * S(n) * s[1] * s[1] - S(2) * detail::scalar_ops<S>::binom(n, 2) * s[2];
}

/// Means of n/2 copies each of +1 and -1:
/// s_k = (-1)^{k/2} C(n/2, k/2) / C(n, k) for even k, 0 for odd k.
template <class S>
MeansTuple<S> extremal_family(int n) {
  if (n <= 0 || n % 2 != 0)
    throw std::domain_error("extremal_family: n must be a positive even integer");
  std::vector<S> m(static_cast<size_t>(n) + 1, S(0));
  m[0] = S(1);
  for (int k = 2; k <= n; k += 2) {
    Rational v = make_frac(binomial(n / 2, k / 2), binomial(n, k));
    if ((k / 2) % 2) v = -v;
    m[k] = detail::scalar_ops<S>::from_rat(v);
  }
  return MeansTuple<S>(std::move(m));
}

/// Plain convolution product.
template <class S>
PolyCoeffs<S> poly_mul(const PolyCoeffs<S>& a, const PolyCoeffs<S>& b) {
  std::vector<S> c(a.coeffs.size() + b.coeffs.size() - 1, S(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return PolyCoeffs<S>(std::move(c));
}

}  // namespace symm
