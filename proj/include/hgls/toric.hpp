#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgls/gamma.hpp"
#include "hgls/laurent.hpp"
#include "hgls/matrix.hpp"

namespace hgls {

using Point = std::vector<long>;

// Unimodular A whose rows are (1,...,1), the d exponent rows and the twist k.
// Indices into m and k are 0-based throughout.
struct ToricModel {
  GammaVector gamma;
  IntMatrix A;
  std::vector<Point> m;  // l exponent vectors in Z^d
  std::vector<long> k;   // twist, gamma.k = 1

  std::size_t l() const { return m.size(); }
  std::size_t d() const { return l() - 2; }
  // sum_j gamma_j t^(k_j) x^(m_j)
  LaurentPolynomial f() const;
  // sum_j u_j x^(m_j) for constant coefficients
  LaurentPolynomial f_at(const std::vector<BigRational>& u) const;
};

ToricModel build_model(const GammaVector& g);
// Errors: RowOneNotOnes, KernelConditionFailed, TwistConditionFailed, NotUnimodular.
ToricModel import_model(const GammaVector& g, const IntMatrix& A);
ToricModel translate_model(const ToricModel& model, std::size_t h);

struct Facet {
  std::vector<BigInt> normal;  // normal . x <= offset on the polytope
  BigInt offset;
  std::vector<std::size_t> points;  // indices of input points on the facet
};

struct Face {
  std::size_t dim;
  std::vector<std::size_t> points;  // indices of input points on the face
};

class LatticePolytope {
 public:
  LatticePolytope() = default;
  // Full-dimensional hull of the given points; throws Error("Degenerate") otherwise.
  explicit LatticePolytope(std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<std::size_t>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  // all faces, the polytope itself last
  const std::vector<Face>& faces() const { return faces_; }
  bool is_simplex() const { return vertices_.size() == dim_ + 1; }
  // input points that are not vertices and lie in no facet
  std::vector<std::size_t> interior_points() const;

  // m / k in the polytope
  bool contains(long k, const Point& m) const;
  // smallest face containing m / k, as an index into faces(); -1 if outside
  long minimal_face(long k, const Point& m) const;
  // all lattice points of k * polytope, lexicographic
  std::vector<Point> lattice_points(long k) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
  std::vector<std::size_t> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
};

LatticePolytope newton_polytope(const ToricModel& model);

// prod u_j^gamma_j == prod gamma_j^gamma_j
bool singular_fiber_criterion(const GammaVector& g, const std::vector<BigRational>& u);

struct SingularPoint {
  bool rational = false;
  std::vector<BigRational> x;  // valid when rational
  // otherwise: x^(exponents[i]) = values[i] for each i
  std::vector<Point> exponents;
  std::vector<BigRational> values;
};

SingularPoint singular_point(const ToricModel& model, const std::vector<BigRational>& u);

// det(M diag(gamma) M^T)
BigInt hessian_determinant(const ToricModel& model);

struct FaceVerdict {
  std::vector<std::size_t> points;
  std::size_t dim;
  bool passes;
};

// For every proper face of positive dimension, the columns (1, m) of the
// points on it must be linearly independent.
std::vector<FaceVerdict> quasi_regularity_check(const LatticePolytope& p);
std::vector<FaceVerdict> quasi_regularity_check(const ToricModel& model);

}  // namespace hgls
