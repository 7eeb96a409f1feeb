#pragma once

#include "symm/rational.hpp"

namespace symm {

/// C(n, k) as an exact big integer. Throws std::domain_error when k > n.
Int binomial(unsigned long n, unsigned long k);

/// k! as an exact big integer.
Int factorial(unsigned long k);

}  // namespace symm
