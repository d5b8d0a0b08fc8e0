#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "hgls/error.hpp"
#include "hgls/ore.hpp"
#include "featured_models.hpp"

using namespace hgls;
using hgls::testing::Gen;

namespace {

RationalFunction t_rf() { return RationalFunction::t_power(1); }

OreOperator random_operator(Gen& g, int max_order) {
  std::vector<RationalFunction> c(static_cast<std::size_t>(g.integer(0, max_order)) + 1);
  for (auto& x : c) x = g.rational_function(2, 4);
  return OreOperator(std::move(c));
}

std::vector<BigRational> q(std::initializer_list<std::pair<long, long>> v) {
  std::vector<BigRational> out;
  for (auto [n, d] : v) out.push_back(make_rational(n, d));
  return out;
}

}  // namespace

TEST_CASE("theta commutes past t with a shift") {
  OreOperator th = OreOperator::theta_power(1);
  OreOperator t(t_rf());
  CHECK(th * t == OreOperator({t_rf(), t_rf()}));
  CHECK(th * th == OreOperator::theta_power(2));
}

TEST_CASE("product agrees with composition of actions") {
  Gen g(11);
  for (int trial = 0; trial < 150; ++trial) {
    OreOperator a = random_operator(g, 3), b = random_operator(g, 3);
    RationalFunction f = g.rational_function(2, 5);
    CHECK((a * b).apply(f) == a.apply(b.apply(f)));
    CHECK((a + b).apply(f) == a.apply(f) + b.apply(f));
  }
}

TEST_CASE("product is associative") {
  Gen g(12);
  for (int trial = 0; trial < 40; ++trial) {
    OreOperator a = random_operator(g, 2), b = random_operator(g, 2), c = random_operator(g, 2);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("right division") {
  Gen g(13);
  for (int trial = 0; trial < 80; ++trial) {
    OreOperator a = random_operator(g, 4), b = random_operator(g, 2);
    if (b.is_zero()) continue;
    auto [quo, rem] = right_divide(a, b);
    CHECK(quo * b + rem == a);
    CHECK(rem.order() < b.order());
    auto [q2, r2] = right_divide(a * b, b);
    CHECK(r2.is_zero());
    CHECK(q2 == a);
  }
  CHECK_THROWS_AS(right_divide(OreOperator::theta_power(1), OreOperator()), Error);
}

TEST_CASE("theta shift conjugates by powers of t") {
  Gen g(14);
  for (int trial = 0; trial < 60; ++trial) {
    OreOperator a = random_operator(g, 3);
    long s = g.integer(-3, 3);
    RationalFunction f = g.rational_function(2, 5);
    CHECK(a.theta_shifted(s).apply(f) == RationalFunction::t_power(-s) * a.apply(RationalFunction::t_power(s) * f));
  }
}

TEST_CASE("text format round trip") {
  Gen g(15);
  for (int trial = 0; trial < 200; ++trial) {
    OreOperator a = random_operator(g, 4);
    std::string s = a.to_string();
    CHECK(OreOperator::parse(s) == a);
    CHECK(OreOperator::parse(s).to_string() == s);
    CHECK(OreOperator::from_coefficient_strings(a.coefficient_strings()) == a);
  }
  CHECK(OreOperator().to_string() == "0");
  CHECK(OreOperator::parse("0").is_zero());
  OreOperator h = build_hypergeometric(q({{1, 1}}), q({{1, 1}}));
  CHECK(h.to_string() == "(-t)*TH^0 + (-t+1)*TH^1");
  OreOperator r({RationalFunction(Polynomial(q({{1, 2}, {0, 1}, {-3, 1}})), Polynomial(q({{1, 1}, {2, 3}})))});
  CHECK(r.to_string() == "(-18*t^2+3)/(4*t+6)*TH^0");
  CHECK_THROWS_AS(OreOperator::parse("(t)*TX^1"), Error);
  CHECK_THROWS_AS(OreOperator::parse("(t+)*TH^1"), Error);
  CHECK_THROWS_AS(OreOperator::parse("(1)/(0)*TH^0"), Error);
}

TEST_CASE("monic normalization") {
  Gen g(16);
  for (int trial = 0; trial < 50; ++trial) {
    OreOperator a = random_operator(g, 3);
    if (a.is_zero()) continue;
    RationalFunction u = g.nonzero_rational_function(2, 4);
    CHECK(equal_up_to_left_unit(a, a.left_scaled(u)));
    CHECK(a.monic().lead() == RationalFunction(1));
  }
}

TEST_CASE("hypergeometric operator annihilates its rational solution") {
  // alpha = beta = 1: 1/(1-t)
  OreOperator h = build_hypergeometric(q({{1, 1}}), q({{1, 1}}));
  RationalFunction f(Polynomial(1), Polynomial(q({{1, 1}, {-1, 1}})));
  CHECK(h.apply(f).is_zero());
  // alpha = 2, beta = 1: 1/(1-t)^2
  OreOperator h2 = build_hypergeometric(q({{2, 1}}), q({{1, 1}}));
  CHECK(h2.apply(f * f).is_zero());
  CHECK_THROWS_AS(build_hypergeometric(q({{1, 2}}), {}), Error);
}

TEST_CASE("GKZ parameters of the curve form at (1,(1,1))") {
  ToricModel model = hgls::testing::curve_model();
  std::vector<long> eta = solve_eta(model, 1, {1, 1});
  CHECK(eta == std::vector<long>{-2, -1, 1, 1});
  auto [op, params] = build_gkz_operator(model.gamma, eta);
  CHECK(op.order() == 7);
  CHECK(params.alpha_eta == q({{2, 5}, {3, 5}, {4, 5}, {1, 1}, {6, 5}, {1, 2}, {1, 1}}));
  CHECK(params.beta_eta == q({{4, 3}, {1, 1}, {2, 3}, {5, 4}, {1, 1}, {3, 4}, {1, 2}}));
  auto [a, b] = cancel_parameters(params.alpha_eta, params.beta_eta);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == q({{2, 5}, {3, 5}, {4, 5}, {6, 5}}));
  CHECK(b == q({{2, 3}, {3, 4}, {5, 4}, {4, 3}}));
}

TEST_CASE("eta solves the linear system") {
  ToricModel model = hgls::testing::chebyshev_model();
  for (long k = 1; k <= 3; ++k) {
    for (long x = -2; x <= 2; ++x) {
      Point beta{x, 1, 2};
      std::vector<long> eta = solve_eta(model, k, beta);
      for (std::size_t r = 0; r < model.l(); ++r) {
        BigInt s = 0;
        for (std::size_t j = 0; j < model.l(); ++j) s += model.A(r, j) * eta[j];
        BigInt expect = r == 0 ? BigInt(-k) : r + 1 == model.l() ? BigInt(0) : BigInt(-beta[r - 1]);
        CHECK(s == expect);
      }
    }
  }
}

TEST_CASE("cancellation removes pairs differing by integers") {
  auto [a, b] = cancel_parameters(q({{1, 2}, {1, 3}, {2, 1}}), q({{3, 2}, {1, 1}, {1, 5}}));
  CHECK(a == q({{1, 3}}));
  CHECK(b == q({{1, 5}}));
  Gen g(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigRational> alpha, beta;
    int n = static_cast<int>(g.integer(1, 6));
    for (int i = 0; i < n; ++i) {
      alpha.push_back(make_rational(g.integer(-6, 12), g.integer(1, 4)));
      beta.push_back(make_rational(g.integer(-6, 12), g.integer(1, 4)));
    }
    auto [ra, rb] = cancel_parameters(alpha, beta);
    CHECK(ra.size() == rb.size());
    for (const auto& x : ra)
      for (const auto& y : rb) CHECK(frac(x) != frac(y));
    // residue-class multisets lose the same count
    auto [ra2, rb2] = cancel_parameters(beta, alpha);
    CHECK(ra2.size() == rb.size());
  }
}

TEST_CASE("local exponents at zero are 1 - beta") {
  Gen g(18);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(g.integer(1, 5));
    std::vector<BigRational> alpha, beta;
    for (int i = 0; i < n; ++i) {
      alpha.push_back(make_rational(g.integer(-5, 9), g.integer(1, 6)));
      beta.push_back(make_rational(g.integer(-5, 9), g.integer(1, 6)));
    }
    LocalExponents ex = local_exponents_at_zero(build_hypergeometric(alpha, beta));
    std::vector<BigRational> expect;
    for (const auto& b : beta) expect.push_back(1 - b);
    std::sort(expect.begin(), expect.end());
    CHECK(ex.rational == expect);
    CHECK(ex.residual == Polynomial(1));
  }
  OreOperator irregular({RationalFunction::t_power(-1), RationalFunction(1)});
  CHECK_THROWS_AS(local_exponents_at_zero(irregular), Error);
  LocalExponents ex = rational_roots(Polynomial(q({{-2, 1}, {0, 1}, {1, 1}})) * Polynomial(q({{-1, 3}, {1, 1}})));
  CHECK(ex.rational == q({{1, 3}}));
  CHECK(ex.residual == Polynomial(q({{-2, 1}, {0, 1}, {1, 1}})));
}

TEST_CASE("singularity probe at t = 1") {
  // theta - c: regular at t = 1
  CHECK(apparent_singularity_probe(OreOperator({RationalFunction(-3), RationalFunction(1)}), 10) ==
        SingularityVerdict::possibly_apparent);
  // D = theta / t, s = t - 1
  OreOperator th = OreOperator::theta_power(1);
  OreOperator inv_t(RationalFunction::t_power(-1));
  OreOperator D = inv_t * th;
  RationalFunction inv_s(Polynomial(1), Polynomial(q({{-1, 1}, {1, 1}})));
  // solutions 1, s^2
  OreOperator apparent = D * D - D.left_scaled(inv_s);
  CHECK(apparent.apply(RationalFunction(Polynomial(q({{1, 1}, {-2, 1}, {1, 1}})))).is_zero());
  CHECK(apparent_singularity_probe(apparent, 10) == SingularityVerdict::possibly_apparent);
  // solutions 1, log s
  CHECK(apparent_singularity_probe(D * D + D.left_scaled(inv_s), 10) == SingularityVerdict::genuine);
  // solutions 1, s^(1/2)
  CHECK(apparent_singularity_probe(D * D + D.left_scaled(inv_s * RationalFunction(make_rational(1, 2)))) ==
        SingularityVerdict::genuine);
  // the curve operator has a repeated exponent at t = 1
  OreOperator h = build_hypergeometric(q({{2, 5}, {3, 5}, {4, 5}, {6, 5}}), q({{2, 3}, {3, 4}, {5, 4}, {4, 3}}));
  CHECK(apparent_singularity_probe(h) == SingularityVerdict::genuine);
  CHECK_THROWS_AS(apparent_singularity_probe(h, 2), Error);
}
