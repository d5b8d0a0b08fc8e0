#pragma once

#include <utility>
#include <vector>

#include "hgls/gamma.hpp"

namespace hgls {

struct HodgeNumber {
  long p, q, h;
  friend bool operator==(const HodgeNumber&, const HodgeNumber&) = default;
};

// counts of positive / negative entries divisible by n
std::pair<long, long> m_plus_minus(const GammaVector& g, long n);

// sum over j in [1, n] coprime to n of T^(sum_i frac(j*gamma_i/n))
Polynomial delta_N(const GammaVector& g, long n);

// sum_i h^{i,kappa-i} T^(i+1); requires a prime gamma vector
Polynomial hodge_polynomial(const GammaVector& g);

long hodge_weight(const GammaVector& g);  // l - 3
std::vector<HodgeNumber> hodge_numbers(const GammaVector& g);

}  // namespace hgls
