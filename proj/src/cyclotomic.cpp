#include "hgls/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "hgls/error.hpp"

namespace hgls {

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

Polynomial cyclotomic(long n) {
  if (n < 1) throw Error("InvalidInput", "cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<long, Polynomial> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  Polynomial p = Polynomial::monomial(1, static_cast<int>(n)) - Polynomial(1);
  for (long d : divisors(n)) {
    if (d == n) continue;
    p = Polynomial::divmod(p, cyclotomic(d)).first;
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(n, p);
  return p;
}

}  // namespace hgls
