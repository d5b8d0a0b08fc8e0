#include "hgls/arith.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "hgls/error.hpp"

namespace hgls {

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool parse_integer(std::string_view s, BigInt* out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(i));
  out->set_str(digits, 10);
  if (s[0] == '-') *out = -*out;
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  BigInt num, den = 1;
  bool ok = parse_integer(text.substr(0, slash), &num);
  if (ok && slash != std::string_view::npos) ok = parse_integer(text.substr(slash + 1), &den);
  if (!ok || den == 0) throw Error("ParseError", "not a rational number: '" + std::string(text) + "'");
  return make_rational(num, den);
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

long gcd(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BigInt floor(const BigRational& v) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

BigRational frac(const BigRational& v) { return v - BigRational(floor(v)); }

bool is_integer(const BigRational& v) { return v.get_den() == 1; }

BigRational power(const BigRational& base, long e) {
  if (e < 0) {
    if (base == 0) throw Error("DivisionByZero", "zero to a negative power");
    return power(1 / base, -e);
  }
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned long n) {
  static std::mutex mu;
  static std::map<unsigned long, BigInt> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  memo.emplace(n, r);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hgls
