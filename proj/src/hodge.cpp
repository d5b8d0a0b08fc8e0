#include "hgls/hodge.hpp"

#include <cstdlib>

#include "hgls/error.hpp"

namespace hgls {

std::pair<long, long> m_plus_minus(const GammaVector& g, long n) {
  if (n < 1) throw Error("InvalidInput", "N must be positive");
  long plus = 0, minus = 0;
  for (long x : g.entries())
    if (x % n == 0) (x > 0 ? plus : minus) += 1;
  return {plus, minus};
}

Polynomial delta_N(const GammaVector& g, long n) {
  if (n < 1) throw Error("InvalidInput", "N must be positive");
  Polynomial p;
  for (long j = 1; j <= n; ++j) {
    if (gcd(j, n) != 1) continue;
    // sum of fractional parts of j*gamma_i/n, computed on numerators
    long s = 0;
    for (long x : g.entries()) {
      long r = (j * x) % n;
      if (r < 0) r += n;
      s += r;
    }
    p += Polynomial::monomial(1, static_cast<int>(s / n));
  }
  return p;
}

Polynomial hodge_polynomial(const GammaVector& g) {
  if (!g.is_prime()) throw Error("NotPrime", "Hodge polynomial needs a prime gamma vector");
  long bound = 0;
  for (long x : g.entries()) bound = std::max(bound, std::labs(x));
  Polynomial total;
  for (long n = 1; n <= bound; ++n) {
    auto [mp, mm] = m_plus_minus(g, n);
    if (mp <= mm) continue;
    // (T^mp - T^mm)/(T - 1) = T^mm (1 + T + ... + T^(mp-mm-1))
    Polynomial geo;
    for (long i = mm; i < mp; ++i) geo += Polynomial::monomial(1, static_cast<int>(i));
    total += geo * delta_N(g, n);
  }
  return total;
}

long hodge_weight(const GammaVector& g) { return static_cast<long>(g.size()) - 3; }

std::vector<HodgeNumber> hodge_numbers(const GammaVector& g) {
  Polynomial d = hodge_polynomial(g);
  long kappa = hodge_weight(g);
  if (d.degree() > kappa + 1) throw Error("Internal", "Hodge polynomial degree exceeds the weight");
  std::vector<HodgeNumber> out;
  for (long i = 0; i <= kappa; ++i) {
    BigRational c = d.coeff(static_cast<int>(i + 1));
    out.push_back({i, kappa - i, c.get_num().get_si()});
  }
  return out;
}

}  // namespace hgls
