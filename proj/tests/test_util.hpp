#pragma once

#include <vector>

#include "symm/attainability.hpp"
#include "symm/symm_core.hpp"

namespace testutil {

using namespace symm;

inline Rational Q(const char* text) { return parse_rational(text); }

inline MeansTuple<Rational> means_of(std::initializer_list<const char*> roots) {
  std::vector<Rational> r;
  for (const char* t : roots) r.push_back(parse_rational(t));
  return elementary_means(RootTuple<Rational>(std::move(r)));
}

inline MeansTuple<Rational> tuple(std::initializer_list<const char*> entries) {
  std::vector<Rational> m;
  for (const char* t : entries) m.push_back(parse_rational(t));
  return MeansTuple<Rational>(std::move(m));
}

inline RootTuple<Rational> roots(std::initializer_list<const char*> entries) {
  std::vector<Rational> r;
  for (const char* t : entries) r.push_back(parse_rational(t));
  return RootTuple<Rational>(std::move(r));
}

inline const std::vector<Dist>& all_dists() {
  static const std::vector<Dist> d{Dist::gauss, Dist::rademacher, Dist::heavy_tail};
  return d;
}

}  // namespace testutil
