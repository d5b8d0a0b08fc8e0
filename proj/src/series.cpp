#include "hgls/series.hpp"

#include <algorithm>

#include "hgls/error.hpp"

namespace hgls {

TruncatedSeries hg_series(const std::vector<BigRational>& alpha, const std::vector<BigRational>& beta, std::size_t N) {
  if (alpha.size() != beta.size()) throw Error("InvalidParameters", "alpha and beta differ in length");
  TruncatedSeries s;
  s.coeffs.reserve(N + 1);
  BigRational c = 1;
  s.coeffs.push_back(c);
  for (std::size_t k = 1; k <= N; ++k) {
    BigRational num = 1, den = 1;
    for (const auto& a : alpha) num *= a + static_cast<long>(k - 1);
    for (const auto& b : beta) den *= b + static_cast<long>(k - 1);
    if (den == 0) throw Error("ZeroPochhammer", "a Pochhammer symbol of beta vanishes");
    c *= num / den;
    s.coeffs.push_back(c);
  }
  return s;
}

TruncatedSeries constant_term_series(const GammaVector& g, std::size_t N) {
  long negatives = std::count_if(g.entries().begin(), g.entries().end(), [](long x) { return x < 0; });
  if (negatives != 1) throw Error("MultipleNegativeEntries", "exactly one negative entry is required");
  long neg = *std::min_element(g.entries().begin(), g.entries().end());
  BigRational gamma = gamma_constant(g);
  TruncatedSeries s;
  BigRational gh = 1;
  for (std::size_t h = 0; h <= N; ++h) {
    BigInt multi = factorial(static_cast<unsigned long>(-neg) * h);
    for (long x : g.entries())
      if (x > 0) multi /= factorial(static_cast<unsigned long>(x) * h);
    BigRational c(multi);
    if ((neg * static_cast<long>(h)) % 2 != 0) c = -c;
    s.coeffs.push_back(c * gh);
    gh *= gamma;
  }
  return s;
}

TruncatedSeries expand(const RationalFunction& f, std::size_t N) {
  const Polynomial& den = f.denominator();
  if (den.coeff(0) == 0) throw Error("PoleAtZero", "rational function has a pole at t = 0");
  const Polynomial& num = f.numerator();
  TruncatedSeries s;
  s.coeffs.assign(N + 1, BigRational(0));
  BigRational inv = 1 / den.coeff(0);
  for (std::size_t n = 0; n <= N; ++n) {
    BigRational acc = num.coeff(static_cast<int>(n));
    for (int j = 1; j <= den.degree() && static_cast<std::size_t>(j) <= n; ++j) acc -= den.coeff(j) * s.coeffs[n - j];
    s.coeffs[n] = acc * inv;
  }
  return s;
}

AnnihilationVerdict annihilation_check(const OreOperator& op, const TruncatedSeries& s) {
  if (op.is_zero()) return {true, s.coeffs.size(), -1};
  const std::size_t N = s.order();
  if (s.coeffs.empty() || N < static_cast<std::size_t>(op.order()) + 5)
    throw Error("InsufficientTruncation", "series must reach order(op) + 5");
  // clear denominators so every coefficient is a polynomial
  Polynomial common(1);
  for (const auto& c : op.coeffs()) {
    Polynomial g = Polynomial::gcd(common, c.denominator());
    common = Polynomial::divmod(common * c.denominator(), g).first;
  }
  std::vector<BigRational> out(N + 1);
  for (int i = 0; i <= op.order(); ++i) {
    const RationalFunction& c = op.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Polynomial p = c.numerator() * Polynomial::divmod(common, c.denominator()).first;
    for (std::size_t k = 0; k <= N; ++k) {
      if (s.coeffs[k] == 0) continue;
      BigRational v = s.coeffs[k];
      for (int e = 0; e < i; ++e) v *= static_cast<long>(k);
      for (int e = 0; e <= p.degree() && k + e <= N; ++e)
        if (p.coeff(e) != 0) out[k + e] += p.coeff(e) * v;
    }
  }
  AnnihilationVerdict verdict{true, N + 1, -1};
  for (std::size_t n = 0; n <= N; ++n) {
    if (out[n] != 0) {
      verdict.annihilated = false;
      verdict.first_nonzero = static_cast<long>(n);
      break;
    }
  }
  return verdict;
}

}  // namespace hgls
