#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "symm/rational.hpp"

namespace symm {

/// The real numbers y_1..y_n. n = 0 is legal (the empty tuple).
template <class S>
struct RootTuple {
  std::vector<S> roots;

  RootTuple() = default;
  explicit RootTuple(std::vector<S> r) : roots(std::move(r)) {}

  int n() const { return static_cast<int>(roots.size()); }
};

/// (s_0, ..., s_n) with s_0 = 1; the central object.
template <class S>
struct MeansTuple {
  std::vector<S> means;

  MeansTuple() : means{S(1)} {}
  explicit MeansTuple(std::vector<S> m) : means(std::move(m)) {
    if (means.empty() || !(means.front() == S(1)))
      throw std::domain_error("MeansTuple: s_0 must be 1");
  }

  int n() const { return static_cast<int>(means.size()) - 1; }
  const S& operator[](int k) const { return means[static_cast<size_t>(k)]; }
};

/// Coefficients of a degree-n polynomial in descending powers of z;
/// coeffs.front() multiplies z^n. Consumers that require a monic input
/// check monic() and report a domain error otherwise.
template <class S>
struct PolyCoeffs {
  std::vector<S> coeffs;

  PolyCoeffs() = default;
  explicit PolyCoeffs(std::vector<S> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw std::domain_error("PolyCoeffs: empty coefficient list");
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool monic() const { return !coeffs.empty() && coeffs.front() == S(1); }
};

}  // namespace symm
