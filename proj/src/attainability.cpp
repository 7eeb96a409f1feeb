#include "symm/attainability.hpp"

#include <stdexcept>

namespace symm {

namespace {

long distinct_real_roots(const IntPoly& squarefree) {
  SturmChain chain = build_sturm_chain(squarefree);
  return sign_variations_neg_inf(chain) - sign_variations_pos_inf(chain);
}

}  // namespace

AttainVerdict is_attainable(const MeansTuple<Rational>& s) {
  PolyCoeffs<Rational> p = means_to_poly(s);
  IntPoly ip = primitive_part(from_rational(p.coeffs));

  AttainVerdict v;
  if (degree(ip) <= 0) {  // n = 0: the unique 0-tuple (1)
    v.attainable = true;
    return v;
  }

  bool ok = true;
  bool top = true;
  IntPoly cur = std::move(ip);
  while (degree(cur) >= 1) {
    IntPoly g = gcd_poly(cur, derivative(cur));
    IntPoly q = (degree(g) == 0) ? cur : primitive_part(divexact(cur, g));
    long cnt = distinct_real_roots(q);
    if (top) {
      v.degree_after_squarefree = degree(q);
      v.real_root_count = cnt;
      top = false;
    }
    if (cnt != degree(q)) {
      ok = false;
      break;
    }
    if (degree(g) == 0) break;
    cur = std::move(g);
  }
  v.attainable = ok;
  return v;
}

MeansTuple<Rational> snap_means(const MeansTuple<double>& s) {
  std::vector<Rational> m;
  m.reserve(s.means.size());
  for (double x : s.means) m.push_back(snap_to_dyadic(x));
  return MeansTuple<Rational>(std::move(m));
}

RootTuple<Rational> snap_roots(const RootTuple<double>& y) {
  std::vector<Rational> r;
  r.reserve(y.roots.size());
  for (double x : y.roots) r.push_back(snap_to_dyadic(x));
  return RootTuple<Rational>(std::move(r));
}

namespace {

RootTuple<double> draw_roots(int n, uint64_t seed, Dist dist) {
  if (n < 0) throw std::domain_error("random_attainable: n >= 0 required");
  SplitMix64 rng = substream(seed, static_cast<uint64_t>(dist), static_cast<uint64_t>(n));
  std::vector<double> roots(static_cast<size_t>(n));
  for (double& r : roots) r = draw(rng, dist);
  return RootTuple<double>(std::move(roots));
}

}  // namespace

std::pair<RootTuple<Rational>, MeansTuple<Rational>> random_attainable(int n, uint64_t seed,
                                                                       Dist dist) {
  RootTuple<Rational> y = snap_roots(draw_roots(n, seed, dist));
  MeansTuple<Rational> s = elementary_means(y);
  return {std::move(y), std::move(s)};
}

std::pair<RootTuple<double>, MeansTuple<double>> random_attainable_float(int n, uint64_t seed,
                                                                         Dist dist) {
  RootTuple<double> y = draw_roots(n, seed, dist);
  MeansTuple<double> s = elementary_means(y);
  return {std::move(y), std::move(s)};
}

}  // namespace symm
