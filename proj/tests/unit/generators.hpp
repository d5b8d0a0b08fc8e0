#pragma once

// Small deterministic generators shared by the property tests.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hgls/polynomial.hpp"
#include "hgls/rational_function.hpp"

namespace hgls::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  long nonzero(long lo, long hi) {
    for (;;) {
      long v = integer(lo, hi);
      if (v != 0) return v;
    }
  }

  BigRational rational(long bound) { return make_rational(integer(-bound, bound), nonzero(1, bound)); }

  Polynomial polynomial(int max_deg, long bound) {
    std::vector<BigRational> c(static_cast<std::size_t>(integer(0, max_deg)) + 1);
    for (auto& x : c) x = rational(bound);
    return Polynomial(std::move(c));
  }

  RationalFunction rational_function(int max_deg, long bound) {
    Polynomial den;
    while (den.is_zero()) den = polynomial(max_deg, bound);
    return RationalFunction(polynomial(max_deg, bound), den);
  }

  RationalFunction nonzero_rational_function(int max_deg, long bound) {
    for (;;) {
      auto r = rational_function(max_deg, bound);
      if (!r.is_zero()) return r;
    }
  }

  // Entries sum to zero, no zero entry; retries until valid.
  std::vector<long> gamma(int min_len, int max_len, long bound, bool require_prime) {
    for (;;) {
      int len = static_cast<int>(integer(min_len, max_len));
      std::vector<long> g;
      long sum = 0;
      for (int i = 0; i + 1 < len; ++i) {
        g.push_back(nonzero(-bound, bound));
        sum += g.back();
      }
      if (sum == 0 || sum > bound || sum < -bound) continue;
      g.push_back(-sum);
      long gg = 0;
      for (long x : g) gg = std::gcd(gg, x);
      if (require_prime && gg != 1) continue;
      return g;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hgls::testing
