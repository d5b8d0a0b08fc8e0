#pragma once

#include "hgls/polynomial.hpp"

namespace hgls {

// Phi_N(T), memoized; thread-safe.
Polynomial cyclotomic(long n);

long euler_phi(long n);
std::vector<long> divisors(long n);

}  // namespace hgls
