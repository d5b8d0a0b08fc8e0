#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "hgls/cyclotomic.hpp"
#include "hgls/error.hpp"
#include "hgls/gamma.hpp"

using namespace hgls;
using hgls::testing::Gen;

namespace {

std::vector<BigRational> fracs(std::initializer_list<std::pair<long, long>> v) {
  std::vector<BigRational> r;
  for (auto [p, q] : v) r.push_back(make_rational(p, q));
  std::sort(r.begin(), r.end());
  return r;
}

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

// Q(T) computed directly as a ratio of binomials, then cancelled by a polynomial gcd.
std::pair<Polynomial, Polynomial> q_oracle(const GammaVector& g) {
  Polynomial num(1), den(1);
  for (long x : g.entries()) {
    Polynomial b = Polynomial::monomial(1, static_cast<int>(std::labs(x))) - Polynomial(1);
    (x < 0 ? num : den) = (x < 0 ? num : den) * b;
  }
  Polynomial c = Polynomial::gcd(num, den);
  return {Polynomial::divmod(num, c).first.monic(), Polynomial::divmod(den, c).first.monic()};
}

}  // namespace

TEST_CASE("make_gamma validation and flags") {
  auto g = make_gamma({-5, -2, 3, 4});
  CHECK(g.is_reduced());
  CHECK(g.is_prime());
  CHECK(error_code([] { make_gamma({-2, 1, 1, 0}); }) == "InvalidEntry");
  CHECK(error_code([] { make_gamma({-2, 1, 2}); }) == "SumNotZero");
  auto h = make_gamma({-4, 2, 2});
  CHECK(h.is_reduced());
  CHECK_FALSE(h.is_prime());
  CHECK(parse_gamma("-5, -2,3,4") == g);
  CHECK(error_code([] { parse_gamma("-5,x,3"); }) == "ParseError");
  CHECK(error_code([] { parse_gamma("-5,,5"); }) == "ParseError");
}

TEST_CASE("reduce and primify") {
  CHECK(reduce(make_gamma({-4, 2, 2, -3, 3})) == make_gamma({-4, 2, 2}));
  CHECK(reduce(make_gamma({-2, -2, 1, 1, 1, 1})) == make_gamma({-2, -2, 1, 1, 1, 1}));
  CHECK(error_code([] { reduce(make_gamma({1, -1})); }) == "TrivialSystem");
  CHECK(primify(make_gamma({-4, 2, 2})) == make_gamma({-4, 2, 2, -3, 3}));
  CHECK(primify(make_gamma({-5, -2, 3, 4})) == make_gamma({-5, -2, 3, 4}));
  auto p = primify(make_gamma({-6, -3, 9}));
  CHECK(p == make_gamma({-6, -3, 9, -5, 5}));
  CHECK(p.is_prime());
}

TEST_CASE("family parameter examples") {
  auto q1 = family_parameter(make_gamma({-2, -2, 1, 1, 1, 1}));
  CHECK(q1.numerator == std::map<long, long>{{2, 2}});
  CHECK(q1.denominator == std::map<long, long>{{1, 2}});
  auto q2 = family_parameter(make_gamma({-5, -2, 3, 4}));
  CHECK(q2.numerator == std::map<long, long>{{5, 1}});
  CHECK(q2.denominator == std::map<long, long>{{3, 1}, {4, 1}});
  auto q3 = family_parameter(make_gamma({-30, -1, 6, 10, 15}));
  CHECK(q3.numerator == std::map<long, long>{{30, 1}});
  CHECK(q3.denominator == std::map<long, long>{{1, 1}, {2, 1}, {3, 1}, {5, 1}});
  CHECK(error_code([] { family_parameter(make_gamma({-3, 3, 1, -1})); }) == "TrivialSystem");
}

TEST_CASE("hypergeometric parameters") {
  auto c = hg_params(make_gamma({-30, -1, 6, 10, 15}));
  CHECK(c.alpha == fracs({{1, 30}, {7, 30}, {11, 30}, {13, 30}, {17, 30}, {19, 30}, {23, 30}, {29, 30}}));
  CHECK(c.beta == fracs({{1, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}));
  auto v = hg_params(make_gamma({-5, -2, 3, 4}));
  CHECK(v.alpha == fracs({{1, 5}, {2, 5}, {3, 5}, {4, 5}}));
  CHECK(v.beta == fracs({{1, 4}, {1, 3}, {2, 3}, {3, 4}}));
  auto s = hg_params(make_gamma({-2, 1, 1}));
  CHECK(s.alpha == fracs({{1, 2}}));
  CHECK(s.beta == fracs({{1, 1}}));
}

TEST_CASE("rank and volume") {
  CHECK(rank(make_gamma({-5, -2, 3, 4})) == 4);
  CHECK(rank(make_gamma({-30, -1, 6, 10, 15})) == 8);
  CHECK(rank(make_gamma({-2, -2, 1, 1, 1, 1})) == 2);
  CHECK(volume(make_gamma({-5, -2, 3, 4})) == 7);
  CHECK(volume(make_gamma({-30, -1, 6, 10, 15})) == 31);
  CHECK(volume(make_gamma({-2, 1, 1})) == 2);
  CHECK(gamma_constant(make_gamma({-2, 1, 1})) == BigRational(1, 4));
}

TEST_CASE("gamma pipeline properties on random vectors") {
  Gen gen(2024);
  int tested = 0;
  while (tested < 500) {
    auto g = make_gamma(gen.gamma(3, 8, 30, true));
    FamilyParameter q;
    try {
      q = family_parameter(g);
    } catch (const Error&) {
      continue;
    }
    ++tested;
    auto p = hg_params(g);
    REQUIRE(p.alpha.size() == p.beta.size());
    for (const auto& a : p.alpha)
      for (const auto& b : p.beta) CHECK_FALSE(is_integer(a - b));
    for (const auto& a : p.alpha) CHECK((a > 0 && a <= 1));

    long num_deg = 0, den_deg = 0;
    for (auto [n, c] : q.numerator) num_deg += c * euler_phi(n);
    for (auto [n, c] : q.denominator) den_deg += c * euler_phi(n);
    CHECK(num_deg == den_deg);
    for (auto [n, c] : q.numerator) CHECK(q.denominator.count(n) == 0);

    auto [on, od] = q_oracle(g);
    CHECK(on == q.numerator_poly());
    CHECK(od == q.denominator_poly());

    CHECK(rank(g) == rank(primify(g)));
    CHECK(rank(g) <= volume(g));
    bool cancelled = q_oracle(g).first.degree() != volume(g);
    CHECK((rank(g) == volume(g)) == !cancelled);
    try {
      CHECK(rank(g) == rank(reduce(g)));
    } catch (const Error&) {
    }
    auto n = hg_params(g.negated());
    CHECK(n.alpha == p.beta);
    CHECK(n.beta == p.alpha);
  }
}
