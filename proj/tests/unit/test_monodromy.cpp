#include <doctest.h>

#include "generators.hpp"
#include "hgls/cyclotomic.hpp"
#include "hgls/error.hpp"
#include "hgls/monodromy.hpp"

using namespace hgls;
using hgls::testing::Gen;

namespace {

// det(T I - m) by cofactor expansion over Q[T], independent of the library routine
Polynomial charpoly_cofactor(const QMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? Polynomial::variable() : Polynomial()) - Polynomial(m(i, j));
  std::function<Polynomial(std::vector<std::size_t>, std::size_t)> det = [&](std::vector<std::size_t> cols, std::size_t row) {
    if (cols.empty()) return Polynomial(1);
    Polynomial acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (a[row][cols[k]].is_zero()) continue;
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + static_cast<long>(k));
      Polynomial term = a[row][cols[k]] * det(rest, row + 1);
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return det(cols, 0);
}

QMatrix diag(std::initializer_list<long> v) {
  QMatrix m(v.size(), v.size());
  std::size_t i = 0;
  for (long x : v) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("companion matrices") {
  CHECK(companion(Polynomial::variable() - Polynomial(1)) == diag({1}));
  CHECK(companion(Polynomial::variable() + Polynomial(1)) == diag({-1}));
  QMatrix c5 = companion(cyclotomic(5));
  CHECK(c5.rows() == 4);
  CHECK(charpoly_cofactor(c5) == cyclotomic(5));
  CHECK(c5.charpoly() == cyclotomic(5));
  CHECK_THROWS_AS(companion(Polynomial::variable().scaled(2)), Error);
  CHECK_THROWS_AS(companion(Polynomial(1)), Error);
}

TEST_CASE("Levelt triples of the examples") {
  MonodromyTriple t = levelt_triple(make_gamma({-2, 1, 1}));
  CHECK(t.hinf == diag({-1}));
  CHECK(t.h0 == diag({1}));
  CHECK(t.h1 == diag({-1}));
  CHECK(pseudoreflection_rank(t.h1) == 1);

  MonodromyTriple c = levelt_triple(make_gamma({-5, -2, 3, 4}));
  CHECK(charpoly_cofactor(c.hinf) == cyclotomic(5));
  CHECK(charpoly_cofactor(c.h0.inverse()) == cyclotomic(3) * cyclotomic(4));
  CHECK(pseudoreflection_rank(c.h1) == 1);

  MonodromyTriple ch = levelt_triple(make_gamma({-30, -1, 6, 10, 15}));
  CHECK(ch.hinf.rows() == 8);
  CHECK(ch.hinf.charpoly() == cyclotomic(30));
  CHECK(pseudoreflection_rank(ch.h1) == 1);
  CHECK(ch.hinf * ch.h1 * ch.h0 == QMatrix::identity(8));

  CHECK_THROWS_AS(levelt_triple(make_gamma({-1, -1, 1, 1})), Error);
}

TEST_CASE("pseudoreflection rank") {
  CHECK(pseudoreflection_rank(QMatrix::identity(3)) == 0);
  CHECK(pseudoreflection_rank(diag({-1, -1})) == 2);
  CHECK_THROWS_AS(pseudoreflection_rank(QMatrix(2, 3)), Error);
}

TEST_CASE("Levelt triples of random gamma vectors") {
  Gen gen(31);
  int done = 0;
  while (done < 300) {
    GammaVector g = make_gamma(gen.gamma(3, 8, 30, true));
    MonodromyTriple t;
    try {
      t = levelt_triple(g);
    } catch (const Error& e) {
      CHECK(e.code() == "TrivialSystem");
      continue;
    }
    ++done;
    FamilyParameter q = family_parameter(g);
    const std::size_t n = t.hinf.rows();
    CHECK(pseudoreflection_rank(t.h1) == 1);
    CHECK(t.hinf * t.h1 * t.h0 == QMatrix::identity(n));
    CHECK(t.hinf.charpoly() == q.numerator_poly());
    CHECK(t.h0.inverse().charpoly() == q.denominator_poly());
    CHECK(t.h1.det() == q.denominator_poly().coeff(0) / q.numerator_poly().coeff(0));
  }
}
