#include "symm/binomial.hpp"

#include <stdexcept>

namespace symm {

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) throw std::domain_error("binomial: k > n");
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

}  // namespace symm
