#include "hgls/gamma.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "hgls/cyclotomic.hpp"
#include "hgls/error.hpp"

namespace hgls {

bool GammaVector::is_reduced() const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    for (std::size_t j = i + 1; j < e_.size(); ++j)
      if (e_[i] + e_[j] == 0) return false;
  return true;
}

long GammaVector::content() const {
  long g = 0;
  for (long x : e_) g = gcd(g, x);
  return g;
}

bool GammaVector::is_prime() const { return content() == 1; }

GammaVector GammaVector::negated() const {
  GammaVector r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

std::string GammaVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i];
  return os.str();
}

GammaVector make_gamma(std::vector<long> entries) {
  if (entries.size() < 2) throw Error("InvalidEntry", "gamma vector needs at least two entries");
  long sum = 0;
  for (long x : entries) {
    if (x == 0) throw Error("InvalidEntry", "gamma vector entries must be nonzero");
    sum += x;
  }
  if (sum != 0) throw Error("SumNotZero", "gamma vector entries sum to " + std::to_string(sum));
  GammaVector g;
  g.e_ = std::move(entries);
  return g;
}

GammaVector parse_gamma(std::string_view text) {
  std::vector<long> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    long x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw Error("ParseError", "bad gamma entry '" + std::string(tok) + "' at position " + std::to_string(pos));
    v.push_back(x);
    pos = end + 1;
  }
  return make_gamma(std::move(v));
}

GammaVector reduce(const GammaVector& g) {
  std::vector<long> e = g.entries();
  std::vector<bool> drop(e.size(), false);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (drop[i] || e[i] < 0) continue;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (!drop[j] && e[j] == -e[i]) {
        drop[i] = drop[j] = true;
        break;
      }
  }
  std::vector<long> kept;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!drop[i]) kept.push_back(e[i]);
  if (kept.empty()) throw Error("TrivialSystem", "gamma vector is a union of opposite pairs");
  return make_gamma(std::move(kept));
}

GammaVector primify(const GammaVector& g) {
  long c = g.content();
  if (c == 1) return g;
  long m = 1;
  while (gcd(2 * m + 1, c) != 1) ++m;
  std::vector<long> e = g.entries();
  e.push_back(-(2 * m + 1));
  e.push_back(2 * m + 1);
  return make_gamma(std::move(e));
}

FamilyParameter family_parameter(const GammaVector& g) {
  std::map<long, long> num, den;
  for (long x : g.entries())
    for (long d : divisors(std::labs(x))) (x < 0 ? num : den)[d] += 1;
  FamilyParameter q;
  for (auto [n, c] : num) {
    long r = c - (den.count(n) ? den[n] : 0);
    if (r > 0) q.numerator[n] = r;
  }
  for (auto [n, c] : den) {
    long r = c - (num.count(n) ? num[n] : 0);
    if (r > 0) q.denominator[n] = r;
  }
  if (q.numerator.empty() && q.denominator.empty())
    throw Error("TrivialSystem", "family parameter cancels completely");
  return q;
}

namespace {

Polynomial product(const std::map<long, long>& mult) {
  Polynomial p(1);
  for (auto [n, c] : mult)
    for (long i = 0; i < c; ++i) p = p * cyclotomic(n);
  return p;
}

std::vector<BigRational> roots_in_unit_interval(const std::map<long, long>& mult) {
  std::vector<BigRational> r;
  for (auto [n, c] : mult)
    for (long j = 1; j <= n; ++j)
      if (gcd(j, n) == 1)
        for (long i = 0; i < c; ++i) r.push_back(make_rational(j, n));
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

Polynomial FamilyParameter::numerator_poly() const { return product(numerator); }
Polynomial FamilyParameter::denominator_poly() const { return product(denominator); }

HGParams hg_params(const GammaVector& g) {
  FamilyParameter q = family_parameter(g);
  return {roots_in_unit_interval(q.numerator), roots_in_unit_interval(q.denominator)};
}

long rank(const GammaVector& g) {
  FamilyParameter q = family_parameter(g);
  long r = 0;
  for (auto [n, c] : q.numerator) r += c * euler_phi(n);
  return r;
}

long volume(const GammaVector& g) {
  long v = 0;
  for (long x : g.entries())
    if (x > 0) v += x;
  return v;
}

BigRational gamma_constant(const GammaVector& g) {
  BigRational r = 1;
  for (long x : g.entries()) r *= power(BigRational(x), x);
  return r;
}

}  // namespace hgls
