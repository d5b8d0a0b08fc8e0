#include "doctest.h"
#include "generators.hpp"
#include "hgls/cone.hpp"
#include "hgls/error.hpp"
#include "oracles.hpp"
#include "featured_models.hpp"

using namespace hgls;
using namespace hgls::testing;

namespace {

std::vector<Point> interior_at(const LatticePolytope& p, long k) {
  std::vector<Point> out;
  for (const auto& q : enumerate_cone(p, k))
    if (q.k == k && classify(p, q).minimal_face_dim == p.dim()) out.push_back(q.m);
  return out;
}

}  // namespace

TEST_CASE("curve cone census") {
  auto p = newton_polytope(curve_model());
  auto level1 = enumerate_cone(p, 1);
  CHECK(level1.size() == 7);
  CHECK(interior_at(p, 1) == std::vector<Point>{{1, 1}, {1, 2}});
  CHECK(interior_at(p, 2).size() == 10);
  auto tag = classify(p, {1, {1, 1}});
  CHECK(tag.minimal_face_dim == 2);
  CHECK(in_weight_piece(tag, 2, 1));
  CHECK(in_hodge_piece(tag, 1));
  auto vtx = classify(p, {1, {2, 0}});
  CHECK(vtx.minimal_face_dim == 0);
  CHECK_FALSE(in_weight_piece(vtx, 2, 1));
  CHECK(classify(p, {1, {2, 1}}).minimal_face_dim == 1);
  CHECK_THROWS_AS(classify(p, {1, {0, 0}}), Error);
  auto counts = graded_generator_counts(p);
  CHECK(counts[{1, 2}] == 2);
}

TEST_CASE("chebyshev cone census") {
  auto p = newton_polytope(chebyshev_model());
  CHECK(interior_at(p, 1).empty());
  CHECK(interior_at(p, 2).size() == 15);
  CHECK(classify(p, {2, {2, 1, 2}}).minimal_face_dim == 3);
  auto counts = graded_generator_counts(p);
  CHECK(counts[{1, 3}] == 0);
  CHECK(counts[{2, 3}] == 15);
}

TEST_CASE("ehrhart counts agree with the hull oracle") {
  std::vector<ToricModel> models{curve_model(), chebyshev_model(), build_model(make_gamma({-4, 1, 1, 2})),
                                 build_model(make_gamma({-2, 1, 1})), build_model(make_gamma({-3, -1, 2, 2}))};
  for (const auto& m : models) {
    auto p = newton_polytope(m);
    for (long k = 1; k <= 4; ++k) {
      std::size_t n = 0;
      for (const auto& q : enumerate_cone(p, 4)) n += q.k == k ? 1 : 0;
      CHECK(n == ehrhart_bruteforce(m.m, k));
    }
  }
  auto cheb = newton_polytope(chebyshev_model());
  CHECK(cheb.lattice_points(1).size() == 19);
  CHECK(cheb.lattice_points(2).size() == 85);
  CHECK(cheb.lattice_points(3).size() == 230);
}

TEST_CASE("ray invariance and filtration nesting") {
  Gen gen(5);
  std::vector<ToricModel> models{curve_model(), chebyshev_model()};
  for (int i = 0; i < 20; ++i) models.push_back(build_model(make_gamma(gen.gamma(3, 5, 8, true))));
  for (const auto& m : models) {
    auto p = newton_polytope(m);
    for (const auto& q : enumerate_cone(p, 2)) {
      auto tag = classify(p, q);
      for (long c = 2; c <= 3; ++c) {
        Point scaled = q.m;
        for (auto& x : scaled) x *= c;
        CHECK(classify(p, {q.k * c, scaled}).minimal_face_dim == tag.minimal_face_dim);
      }
      for (long ell = q.k; ell <= q.k + 3; ++ell) CHECK(in_hodge_piece(tag, ell));
      CHECK_FALSE(in_hodge_piece(tag, q.k - 1));
    }
  }
}
