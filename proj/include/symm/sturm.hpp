#pragma once

#include <optional>
#include <utility>

#include "symm/intpoly.hpp"
#include "symm/tuples.hpp"

namespace symm {

/// Sturm remainder sequence of a square-free polynomial. Elements are
/// primitive integer representatives of the rational chain (each one a
/// positive multiple of the textbook element, which leaves sign variations
/// unchanged). The last element is a nonzero constant.
struct SturmChain {
  std::vector<IntPoly> seq;
};

/// Requires a square-free input of degree >= 0 (checked: a vanishing
/// remainder before reaching a constant means the input was not square-free).
SturmChain build_sturm_chain(IntPoly squarefree);

int sign_variations_at(const SturmChain& chain, const Rational& x);
int sign_variations_neg_inf(const SturmChain& chain);
int sign_variations_pos_inf(const SturmChain& chain);

/// Number of distinct real roots of p, on the whole line or in the closed
/// interval [a, b]. Exact; throws std::domain_error on the zero polynomial
/// or an empty interval (a > b).
long real_root_count(const PolyCoeffs<Rational>& p,
                     const std::optional<std::pair<Rational, Rational>>& interval = std::nullopt);

}  // namespace symm
