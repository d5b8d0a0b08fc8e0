#include "hgls/covering.hpp"

#include <algorithm>
#include <numeric>

#include "hgls/error.hpp"
#include "hgls/matrix.hpp"

namespace hgls {

bool lattice_primitivity(const ToricModel& model) {
  const std::size_t d = model.d();
  IntMatrix diff(model.l() - 1, d);
  for (std::size_t j = 1; j < model.l(); ++j)
    for (std::size_t i = 0; i < d; ++i) diff(j - 1, i) = model.m[j][i] - model.m[0][i];
  std::vector<BigInt> f = smith_normal_form(diff).invariant_factors();
  if (f.size() < d) return false;
  for (std::size_t i = 0; i < d; ++i)
    if (abs(f[i]) != 1) return false;
  return true;
}

CoveringData quadrilateral_covering(const GammaVector& g) {
  const auto& e = g.entries();
  if (e.size() != 4 || std::count_if(e.begin(), e.end(), [](long x) { return x < 0; }) != 2)
    throw Error("NotQuadrilateral", "need two negative and two positive entries");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (e[i] + e[j] == 0) throw Error("OppositePair", "two entries sum to zero");
  if (!g.is_prime()) throw Error("NotPrime", "gamma vector must be prime");

  CoveringData out;
  // the largest absolute value must be negative
  std::size_t top = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (std::labs(e[i]) > std::labs(e[top])) top = i;
  out.sign = e[top] < 0 ? 1 : -1;
  std::vector<std::size_t> neg, pos;
  for (std::size_t i = 0; i < 4; ++i) (out.sign * e[i] < 0 ? neg : pos).push_back(i);
  auto by_abs = [&](std::size_t x, std::size_t y) {
    if (std::labs(e[x]) != std::labs(e[y])) return std::labs(e[x]) < std::labs(e[y]);
    return x < y;
  };
  std::sort(neg.begin(), neg.end(), by_abs);
  std::sort(pos.begin(), pos.end(), by_abs);
  out.permutation = {neg[0], neg[1], pos[0], pos[1]};
  for (std::size_t i = 0; i < 4; ++i) out.normalized[i] = out.sign * e[out.permutation[i]];
  const auto& n = out.normalized;

  long d14 = std::gcd(n[0], n[3]), d23 = std::gcd(n[1], n[2]);
  out.a = -n[0] / d14;
  out.A = n[3] / d14;
  out.b = n[2] / d23;
  out.B = -n[1] / d23;
  if ((out.A - out.a) % d23 != 0 || (out.B - out.b) % d14 != 0)
    throw Error("Internal", "covering divisibility failed");
  out.c = (out.A - out.a) / d23;
  if (out.c != (out.B - out.b) / d14) throw Error("Internal", "covering integers disagree");

  if (out.A != out.B) {
    out.exponents = {out.A, out.b, out.B, out.a};
    out.variable = {1, 2, 2, 1};
  } else {
    out.equal_degrees = true;
    long nn = out.A;
    out.d = std::gcd(nn - out.a, nn - out.b);
    out.e = std::gcd(out.a, out.b);
    long de = out.d * out.e;
    out.exponents = {out.b * (nn - out.a) / de, (nn - out.b) / out.d, out.a * (nn - out.b) / de, (nn - out.a) / out.d};
    out.variable = {1, 2, 1, 2};
  }
  long y1[2], y2[2];
  int i1 = 0, i2 = 0;
  for (std::size_t i = 0; i < 4; ++i) (out.variable[i] == 1 ? y1[i1++] : y2[i2++]) = out.exponents[i];
  out.gcd_y1 = std::gcd(y1[0], y1[1]);
  out.gcd_y2 = std::gcd(y2[0], y2[1]);
  out.degree_y1 = std::max(y1[0], y1[1]);
  out.degree_y2 = std::max(y2[0], y2[1]);
  return out;
}

std::optional<std::pair<Polynomial, Polynomial>> decompose(const Polynomial& f) {
  const int m = f.degree();
  if (m < 4) return std::nullopt;
  Polynomial monic = f.monic();
  for (int s = 2; s < m; ++s) {
    if (m % s != 0) continue;
    const int r = m / s;
    // approximate r-th root: monic h of degree s, h(0) = 0, deg(f - h^r) <= m - s
    std::vector<BigRational> hc(static_cast<std::size_t>(s) + 1);
    hc[static_cast<std::size_t>(s)] = 1;
    for (int k = s - 1; k >= 1; --k) {
      Polynomial h(hc);
      BigRational diff = monic.coeff(m - (s - k)) - h.pow(static_cast<unsigned>(r)).coeff(m - (s - k));
      hc[static_cast<std::size_t>(k)] = diff / r;
    }
    Polynomial h(hc);
    // h-adic expansion with constant digits
    std::vector<BigRational> gc;
    Polynomial rest = monic;
    bool ok = true;
    while (!rest.is_zero()) {
      auto [q, rem] = Polynomial::divmod(rest, h);
      if (rem.degree() > 0) {
        ok = false;
        break;
      }
      gc.push_back(rem.coeff(0));
      rest = q;
    }
    if (ok) {
      Polynomial gpoly(gc);
      return std::make_pair(gpoly.scaled(f.lead()), h);
    }
  }
  return std::nullopt;
}

bool indecomposable_brute(long m, long n, bool require_coprime) {
  if (m > 24) throw Error("BoundExceeded", "degree above 24");
  if (n < 1 || m <= n) throw Error("InvalidInput", "need m > n >= 1");
  if (require_coprime && std::gcd(m, n) != 1) throw Error("NotCoprime", "m and n must be coprime");
  std::vector<BigRational> c(static_cast<std::size_t>(m) + 1);
  c[static_cast<std::size_t>(m)] = 1;
  c[static_cast<std::size_t>(n)] += 1;
  return !decompose(Polynomial(c)).has_value();
}

}  // namespace hgls
