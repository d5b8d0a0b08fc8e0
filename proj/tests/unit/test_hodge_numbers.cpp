#include "doctest.h"
#include "generators.hpp"
#include "hgls/error.hpp"
#include "hgls/hodge.hpp"

using namespace hgls;
using hgls::testing::Gen;

namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<BigRational> v(c.begin(), c.end());
  return Polynomial(std::move(v));
}

}  // namespace

TEST_CASE("m_plus_minus") {
  auto g = make_gamma({-5, -2, 3, 4});
  CHECK(m_plus_minus(g, 3) == std::pair<long, long>{1, 0});
  CHECK(m_plus_minus(g, 2) == std::pair<long, long>{1, 1});
  CHECK(m_plus_minus(g, 1) == std::pair<long, long>{2, 2});
}

TEST_CASE("delta_N") {
  auto g = make_gamma({-5, -2, 3, 4});
  CHECK(delta_N(g, 3) == poly({0, 1, 1}));
  CHECK(delta_N(g, 4) == poly({0, 1, 1}));
  // the only unit mod 1 contributes T^0
  CHECK(delta_N(g, 1) == poly({1}));
  CHECK(delta_N(make_gamma({-30, -1, 6, 10, 15}), 5) == poly({0, 4}));
}

TEST_CASE("Hodge polynomials of the featured examples") {
  CHECK(hodge_polynomial(make_gamma({-5, -2, 3, 4})) == poly({0, 2, 2}));
  CHECK(hodge_polynomial(make_gamma({-30, -1, 6, 10, 15})) == poly({0, 0, 8}));
  CHECK(hodge_polynomial(make_gamma({-2, 1, 1})) == poly({0, 1}));
  CHECK(hodge_numbers(make_gamma({-5, -2, 3, 4})) == std::vector<HodgeNumber>{{0, 1, 2}, {1, 0, 2}});
  CHECK(hodge_numbers(make_gamma({-30, -1, 6, 10, 15})) ==
        std::vector<HodgeNumber>{{0, 2, 0}, {1, 1, 8}, {2, 0, 0}});
  CHECK(hodge_numbers(make_gamma({-2, 1, 1})) == std::vector<HodgeNumber>{{0, 0, 1}});
  CHECK_THROWS_AS(hodge_polynomial(make_gamma({-4, 2, 2})), Error);
}

TEST_CASE("Hodge polynomial properties on random prime vectors") {
  Gen gen(77);
  int tested = 0;
  while (tested < 300) {
    auto g = make_gamma(gen.gamma(3, 8, 30, true));
    long r;
    try {
      r = rank(g);
    } catch (const Error&) {
      continue;
    }
    ++tested;
    Polynomial d = hodge_polynomial(g);
    CHECK(d.eval(1) == r);
    for (const auto& c : d.coeffs()) CHECK((is_integer(c) && c >= 0));
    auto h = hodge_numbers(g);
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i].h == h[h.size() - 1 - i].h);
    CHECK(hodge_polynomial(g.negated()) == d);
  }
}
