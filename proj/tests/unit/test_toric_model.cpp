#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "hgls/error.hpp"
#include "hgls/toric.hpp"
#include "oracles.hpp"
#include "featured_models.hpp"

using namespace hgls;
using namespace hgls::testing;

namespace {

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

std::vector<Point> vertex_points(const LatticePolytope& p) {
  std::vector<Point> v;
  for (auto i : p.vertices()) v.push_back(p.points()[i]);
  std::sort(v.begin(), v.end());
  return v;
}

// vertices by the hull oracle: points not in the hull of the others
std::vector<Point> vertex_oracle(const std::vector<Point>& pts) {
  std::vector<Point> v;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Point> rest;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    bool spans = true;
    try {
      LatticePolytope probe(rest);
    } catch (const Error&) {
      spans = false;
    }
    if (!spans || !hull_contains(rest, 1, pts[i])) v.push_back(pts[i]);
  }
  std::sort(v.begin(), v.end());
  return v;
}

long count_sign(const GammaVector& g, int sign) {
  return std::count_if(g.entries().begin(), g.entries().end(), [&](long x) { return x * sign > 0; });
}

BigInt neg_product(const GammaVector& g) {
  BigInt p = 1;
  for (long x : g.entries()) p *= x;
  return -p;
}

void check_model_invariants(const ToricModel& m) {
  for (std::size_t j = 0; j < m.l(); ++j) CHECK(m.A(0, j) == 1);
  long tw = 0;
  for (std::size_t j = 0; j < m.l(); ++j) tw += m.gamma[j] * m.k[j];
  CHECK(tw == 1);
  CHECK(abs(m.A.det()) == 1);
  for (std::size_t i = 0; i < m.d(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < m.l(); ++j) s += m.gamma[j] * m.m[j][i];
    CHECK(s == 0);
  }
  auto sorted = m.m;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

}  // namespace

TEST_CASE("reference matrices import") {
  auto c = curve_model();
  CHECK(c.m == std::vector<Point>{{2, 0}, {0, 3}, {2, 2}, {1, 0}});
  CHECK(c.k == std::vector<long>{0, 1, 1, 0});
  auto f = c.f();
  CHECK(f.coeff({2, 0}) == RationalFunction(-5));
  CHECK(f.coeff({0, 3}) == RationalFunction(-2) * RationalFunction::t_power(1));
  auto ch = chebyshev_model();
  CHECK(ch.k == std::vector<long>{0, -1, 0, 0, 0});
  CHECK(ch.f().coeff({0, 0, 0}) == RationalFunction(-1) * RationalFunction::t_power(-1));
}

TEST_CASE("import_model violations") {
  auto g = make_gamma({-5, -2, 3, 4});
  CHECK(error_code([&] { import_model(g, IntMatrix::identity(4)); }) == "RowOneNotOnes");
  IntMatrix bad_kernel{{1, 1, 1, 1}, {1, 0, 0, 0}, {0, 3, 2, 0}, {0, 1, 1, 0}};
  CHECK(error_code([&] { import_model(g, bad_kernel); }) == "KernelConditionFailed");
  IntMatrix no_twist{{1, 1, 1, 1}, {2, 0, 2, 1}, {0, 3, 2, 0}, {0, 0, 0, 0}};
  CHECK(error_code([&] { import_model(g, no_twist); }) == "TwistConditionFailed");
  // rows in the kernel but not spanning it saturatedly
  IntMatrix coarse{{1, 1, 1, 1}, {4, 0, 4, 2}, {0, 3, 2, 0}, {0, 1, 1, 0}};
  CHECK(error_code([&] { import_model(g, coarse); }) == "NotUnimodular");
}

TEST_CASE("build_model examples") {
  for (auto e : {std::vector<long>{-5, -2, 3, 4}, {-30, -1, 6, 10, 15}, {-2, 1, 1}}) {
    auto m = build_model(make_gamma(e));
    check_model_invariants(m);
    CHECK(m.d() == e.size() - 2);
  }
  CHECK(error_code([] { build_model(make_gamma({-4, 2, 2})); }) == "NotPrime");
  // deterministic
  CHECK(build_model(make_gamma({-5, -2, 3, 4})).A == build_model(make_gamma({-5, -2, 3, 4})).A);
}

TEST_CASE("translate_model") {
  auto c = curve_model();
  auto t = translate_model(c, 3);
  CHECK(t.m == std::vector<Point>{{1, 0}, {-1, 3}, {1, 2}, {0, 0}});
  CHECK(t.k == c.k);
  auto again = translate_model(t, 3);
  CHECK(again.A == t.A);
  auto ch = translate_model(chebyshev_model(), 1);
  check_model_invariants(ch);
  // two translations equal one
  auto two = translate_model(translate_model(c, 1), 2);
  CHECK(two.m == translate_model(c, 2).m);
}

TEST_CASE("newton polytopes") {
  auto pc = newton_polytope(curve_model());
  CHECK(vertex_points(pc) == std::vector<Point>{{0, 3}, {1, 0}, {2, 0}, {2, 2}});
  CHECK_FALSE(pc.is_simplex());
  CHECK(pc.facets().size() == 4);

  auto pch = newton_polytope(chebyshev_model());
  CHECK(vertex_points(pch) == std::vector<Point>{{0, 0, 0}, {0, 0, 2}, {0, 3, 0}, {1, 1, 1}, {5, 0, 0}});
  CHECK_FALSE(pch.is_simplex());
  CHECK(pch.interior_points().empty());

  auto g = make_gamma({-4, 1, 1, 2});
  auto p = newton_polytope(build_model(g));
  CHECK(p.is_simplex());
  CHECK(p.interior_points() == std::vector<std::size_t>{0});
}

TEST_CASE("singular fibre criterion and point") {
  auto g = make_gamma({-5, -2, 3, 4});
  std::vector<BigRational> u{-5, -2, 3, 4};
  CHECK(singular_fiber_criterion(g, u));
  std::vector<BigRational> u2{-10, -4, 6, 8};
  CHECK(singular_fiber_criterion(g, u2));
  CHECK(gamma_constant(g) == BigRational(-1728, 3125));
  CHECK(gamma_constant(g) != BigRational(-864, 3125));
  std::vector<BigRational> moved{-5, -2, 3, 2};
  CHECK_FALSE(singular_fiber_criterion(g, moved));

  auto c = curve_model();
  auto sp = singular_point(c, u);
  REQUIRE(sp.rational);
  CHECK(sp.x == std::vector<BigRational>{1, 1});
  auto ch = chebyshev_model();
  std::vector<BigRational> uc{-30, -1, 6, 10, 15};
  auto sp2 = singular_point(ch, uc);
  REQUIRE(sp2.rational);
  CHECK(sp2.x == std::vector<BigRational>{1, 1, 1});
  std::vector<BigRational> off{1, 1, 1, 1};
  CHECK(error_code([&] { singular_point(c, off); }) == "CriterionFails");
}

TEST_CASE("hessian determinant examples") {
  CHECK(hessian_determinant(curve_model()) == -120);
  CHECK(hessian_determinant(chebyshev_model()) == -27000);
  CHECK(hessian_determinant(build_model(make_gamma({-2, 1, 1}))) == 2);
}

TEST_CASE("quasi regularity") {
  for (const auto& v : quasi_regularity_check(curve_model())) CHECK(v.passes);
  CHECK(quasi_regularity_check(curve_model()).size() == 4);
  for (const auto& v : quasi_regularity_check(chebyshev_model())) CHECK(v.passes);
  // ((y-1)^2 - (x-1)^3) z - 1
  LatticePolytope non({{0, 2, 1}, {0, 1, 1}, {0, 0, 1}, {3, 0, 1}, {2, 0, 1}, {1, 0, 1}, {0, 0, 0}});
  bool top_fails = false;
  for (const auto& v : quasi_regularity_check(non))
    if (v.dim == 2 && v.points.size() == 6) top_fails = !v.passes;
  CHECK(top_fails);
}

TEST_CASE("toric model properties on random prime vectors") {
  Gen gen(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = make_gamma(gen.gamma(3, 7, 30, true));
    auto m = build_model(g);
    check_model_invariants(m);
    CHECK(hessian_determinant(m) == neg_product(g));
    auto h = static_cast<std::size_t>(gen.integer(0, static_cast<long>(m.l()) - 1));
    auto t = translate_model(m, h);
    check_model_invariants(t);
    CHECK(hessian_determinant(t) == neg_product(g));
    // singular point at u = gamma scaled by a random constant
    BigRational s = gen.nonzero(1, 9);
    std::vector<BigRational> u;
    for (std::size_t j = 0; j < g.size(); ++j) u.push_back(s * g[j]);
    auto sp = singular_point(m, u);
    REQUIRE(sp.rational);
    auto fu = m.f_at(u);
    auto eval = [&](const LaurentPolynomial& p) {
      BigRational acc = 0;
      for (const auto& [e, c] : p.terms()) {
        BigRational term = c.eval(0);
        for (std::size_t i = 0; i < e.size(); ++i) term *= power(sp.x[i], e[i]);
        acc += term;
      }
      return acc;
    };
    CHECK(eval(fu) == 0);
    for (std::size_t i = 0; i < m.d(); ++i) CHECK(eval(fu.euler_derivative(i)) == 0);
    if (g.size() <= 6) {
      auto p = newton_polytope(m);
      bool lone = count_sign(g, -1) == 1 || count_sign(g, 1) == 1;
      CHECK(p.is_simplex() == lone);
      CHECK(vertex_points(p) == vertex_oracle(m.m));
    }
  }
}
