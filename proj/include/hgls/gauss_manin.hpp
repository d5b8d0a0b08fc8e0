#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hgls/cone.hpp"
#include "hgls/ore.hpp"
#include "hgls/rational_function.hpp"
#include "hgls/toric.hpp"

namespace hgls {

// x^beta / f^beta0 dx/x
struct MonomialForm {
  long beta0;
  Point beta;
  friend auto operator<=>(const MonomialForm&, const MonomialForm&) = default;
  std::string to_string() const;  // "beta0;b1,...,bd"
};

MonomialForm parse_form(std::string_view text);

// Finite Q(t)-combination of forms. Pole order 0 is allowed only for dx/x.
class CohomologyClass {
 public:
  CohomologyClass() = default;
  CohomologyClass(const MonomialForm& f) { add(f, RationalFunction(1)); }  // NOLINT
  void add(const MonomialForm& f, const RationalFunction& c);
  const std::map<MonomialForm, RationalFunction>& terms() const { return terms_; }
  long max_pole() const;

 private:
  std::map<MonomialForm, RationalFunction> terms_;
};

using Coordinates = std::vector<RationalFunction>;

// Quotient of the cone algebra by the images of the D_i, truncated at a pole order.
class CohomologyBasis {
 public:
  const ToricModel& model() const { return model_; }
  const LatticePolytope& polytope() const { return polytope_; }
  long max_pole() const { return max_pole_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<MonomialForm>& basis() const { return basis_; }
  // coordinates of theta applied to each basis form, one column per form
  const std::vector<Coordinates>& theta_matrix() const { return theta_; }
  // coordinates of a form with 1 <= beta0 <= max_pole(); throws UnreducibleForm beyond
  const Coordinates& coordinates(const MonomialForm& f) const;
  bool covers(long pole) const { return pole <= max_pole_; }

 private:
  friend CohomologyBasis build_basis(const ToricModel& model, long max_pole);
  ToricModel model_;
  LatticePolytope polytope_;
  long max_pole_ = 0;
  std::vector<MonomialForm> basis_;
  std::map<ConePoint, Coordinates> table_;
  std::vector<Coordinates> theta_;
};

// max_pole 0 means d + 1. Throws DegenerateModel for an empty quotient.
CohomologyBasis build_basis(const ToricModel& model, long max_pole = 0);

// D_i(x0^k x^m) mapped to forms; i = 0 is the x0 direction.
CohomologyClass apply_D(const ToricModel& model, std::size_t i, long k, const Point& m);

// Forms above the table's pole order are handled by a rebuilt table.
Coordinates reduce_class(const CohomologyBasis& basis, const CohomologyClass& c);
Coordinates gauss_manin_theta(const CohomologyBasis& basis, const CohomologyClass& c);
// theta on a coordinate vector
Coordinates theta_coordinates(const CohomologyBasis& basis, const Coordinates& v);

struct WeightEigenvalues {
  std::vector<BigRational> mu;  // convex coefficients over the minimal face
  std::vector<BigRational> d;   // -beta0 * mu
  BigRational t_eigenvalue;     // sum_j k_j d_j
};

// Throws InteriorPoint when beta/beta0 is interior.
WeightEigenvalues weight_theta_eigenvalues(const ToricModel& model, const MonomialForm& f);

// Monic generator of the annihilator; throws ZeroClass for exact classes.
OreOperator minimal_operator(const CohomologyBasis& basis, const CohomologyClass& c);

std::size_t weight_graded_dimension(const CohomologyBasis& basis, long weight_level);

// rank over Q(t) of a list of vectors
std::size_t rank_over_qt(const std::vector<Coordinates>& vectors);

// Incrementally grown span of vectors in Q(t)^n.
class QtSpan {
 public:
  explicit QtSpan(std::size_t n);
  ~QtSpan();
  QtSpan(QtSpan&&) noexcept;
  QtSpan& operator=(QtSpan&&) noexcept;
  // true when v was independent
  bool add(const Coordinates& v);
  bool contains(const Coordinates& v) const;
  std::size_t rank() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace hgls
