#include "symm/sturm.hpp"

#include <stdexcept>

namespace symm {

namespace {

int count_variations(const std::vector<int>& signs) {
  int last = 0, vars = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++vars;
    last = s;
  }
  return vars;
}

}  // namespace

SturmChain build_sturm_chain(IntPoly squarefree) {
  IntPoly p0 = primitive_part(std::move(squarefree));
  if (is_zero(p0)) throw std::domain_error("build_sturm_chain: zero polynomial");
  if (sgn(p0.c.front()) < 0) p0 = negate(std::move(p0));  // uniform flip, variations unchanged

  SturmChain chain;
  chain.seq.push_back(p0);
  if (degree(p0) == 0) return chain;
  chain.seq.push_back(primitive_part(derivative(p0)));

  while (degree(chain.seq.back()) > 0) {
    const IntPoly& a = chain.seq[chain.seq.size() - 2];
    const IntPoly& b = chain.seq.back();
    IntPoly r = primitive_part(negate(prem_pos(a, b)));
    if (is_zero(r)) throw std::logic_error("build_sturm_chain: input not square-free");
    chain.seq.push_back(std::move(r));
  }
  return chain;
}

int sign_variations_at(const SturmChain& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.seq.size());
  for (const IntPoly& p : chain.seq) signs.push_back(sign_at(p, x));
  return count_variations(signs);
}

int sign_variations_neg_inf(const SturmChain& chain) {
  std::vector<int> signs;
  signs.reserve(chain.seq.size());
  for (const IntPoly& p : chain.seq) signs.push_back(sign_at_neg_inf(p));
  return count_variations(signs);
}

int sign_variations_pos_inf(const SturmChain& chain) {
  std::vector<int> signs;
  signs.reserve(chain.seq.size());
  for (const IntPoly& p : chain.seq) signs.push_back(sign_at_pos_inf(p));
  return count_variations(signs);
}

long real_root_count(const PolyCoeffs<Rational>& p,
                     const std::optional<std::pair<Rational, Rational>>& interval) {
  IntPoly ip = primitive_part(from_rational(p.coeffs));
  if (is_zero(ip)) throw std::domain_error("real_root_count: zero polynomial");
  if (degree(ip) == 0) return 0;

  IntPoly q = squarefree_part(ip);
  SturmChain chain = build_sturm_chain(q);

  if (!interval) return sign_variations_neg_inf(chain) - sign_variations_pos_inf(chain);

  const auto& [a, b] = *interval;
  if (a > b) throw std::domain_error("real_root_count: empty interval (a > b)");
  // V(a) - V(b) counts distinct roots in (a, b]; add a itself when it is a root
  long cnt = sign_variations_at(chain, a) - sign_variations_at(chain, b);
  if (sign_at(q, a) == 0) ++cnt;
  return cnt;
}

}  // namespace symm
