#pragma once

#include <cstdint>
#include <utility>

#include "symm/rng.hpp"
#include "symm/sturm.hpp"
#include "symm/symm_core.hpp"

namespace symm {

struct AttainVerdict {
  bool attainable = false;
  long real_root_count = 0;       // distinct real roots of the associated polynomial
  int degree_after_squarefree = 0;
};

/// Decides whether s arises from real roots: the associated monic polynomial
/// must have all roots real counted with multiplicity. Decided by recursive
/// square-free (gcd with derivative) decomposition, requiring each
/// square-free factor to be totally real under a Sturm count. Exact mode
/// only; snap float data first (snap_means / snap_roots).
AttainVerdict is_attainable(const MeansTuple<Rational>& s);

/// (s_0, lambda s_1, ..., lambda^n s_n); preserves attainability.
template <class S>
MeansTuple<S> scale(const MeansTuple<S>& s, const S& lambda) {
  std::vector<S> out(s.means);
  S p(1);
  for (int k = 1; k <= s.n(); ++k) {
    p *= lambda;
    out[static_cast<size_t>(k)] *= p;
  }
  return MeansTuple<S>(std::move(out));
}

/// (1, s_{n-1}/s_n, ..., s_0/s_n), the means of the inverted roots;
/// normalized so the leading entry is 1. Throws std::domain_error when
/// s_n = 0 (precondition violation).
template <class S>
MeansTuple<S> reflect(const MeansTuple<S>& s) {
  const int n = s.n();
  if (s[n] == S(0)) throw std::domain_error("reflect: s_n = 0");
  std::vector<S> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[static_cast<size_t>(k)] = s[n - k] / s[n];
  return MeansTuple<S>(std::move(out));
}

/// Prefix (s_0, ..., s_l); attainability is preserved. 1 <= l <= n.
template <class S>
MeansTuple<S> truncate(const MeansTuple<S>& s, int l) {
  if (l < 1 || l > s.n()) throw std::domain_error("truncate: l out of range");
  return MeansTuple<S>(
      std::vector<S>(s.means.begin(), s.means.begin() + static_cast<long>(l) + 1));
}

MeansTuple<Rational> snap_means(const MeansTuple<double>& s);
RootTuple<Rational> snap_roots(const RootTuple<double>& y);

/// Deterministic root draw from (n, seed, dist); exact flavor snaps each
/// root onto the denominator-2^53 grid, so the returned means match the
/// returned roots exactly and the tuple passes is_attainable.
std::pair<RootTuple<Rational>, MeansTuple<Rational>> random_attainable(int n, uint64_t seed,
                                                                       Dist dist);
std::pair<RootTuple<double>, MeansTuple<double>> random_attainable_float(int n, uint64_t seed,
                                                                         Dist dist);

}  // namespace symm
