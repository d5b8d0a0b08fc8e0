#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgls/gamma.hpp"
#include "hgls/rational_function.hpp"
#include "hgls/toric.hpp"

namespace hgls {

// sum_i a_i(t) theta^i with theta = t d/dt; a_i are left coefficients.
class OreOperator {
 public:
  OreOperator() = default;
  explicit OreOperator(std::vector<RationalFunction> coeffs);
  OreOperator(const RationalFunction& c) : OreOperator(std::vector<RationalFunction>{c}) {}  // NOLINT
  static OreOperator theta_power(int i);
  // constant-coefficient polynomial in theta
  static OreOperator from_theta_poly(const Polynomial& p);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RationalFunction>& coeffs() const { return c_; }
  RationalFunction coeff(int i) const;
  const RationalFunction& lead() const { return c_.back(); }

  OreOperator operator-() const;
  friend OreOperator operator+(const OreOperator& a, const OreOperator& b);
  friend OreOperator operator-(const OreOperator& a, const OreOperator& b);
  friend OreOperator operator*(const OreOperator& a, const OreOperator& b);
  friend bool operator==(const OreOperator& a, const OreOperator& b) { return a.c_ == b.c_; }
  OreOperator left_scaled(const RationalFunction& c) const;

  // lead coefficient 1, by a left unit
  OreOperator monic() const;
  // a(theta) -> a(theta + s)
  OreOperator theta_shifted(const BigRational& s) const;
  // apply to a rational function
  RationalFunction apply(const RationalFunction& f) const;

  // "(N)/(D)*TH^i + ..." with integer-coefficient N, D; "0" for the zero operator.
  std::string to_string() const;
  static OreOperator parse(std::string_view text);
  // one "(N)/(D)" string per power of theta
  std::vector<std::string> coefficient_strings() const;
  static OreOperator from_coefficient_strings(const std::vector<std::string>& v);

 private:
  void trim();
  std::vector<RationalFunction> c_;
};

bool equal_up_to_left_unit(const OreOperator& a, const OreOperator& b);

// a = q*b + r with order(r) < order(b)
std::pair<OreOperator, OreOperator> right_divide(const OreOperator& a, const OreOperator& b);

// prod (theta + beta_i - 1) - t prod (theta + alpha_i)
OreOperator build_hypergeometric(const std::vector<BigRational>& alpha, const std::vector<BigRational>& beta);

struct GKZParams {
  std::vector<BigRational> alpha_eta;  // from negative entries
  std::vector<BigRational> beta_eta;   // from positive entries
  std::vector<long> eta;
};

// A^{-1} (-beta0, -beta, 0)
std::vector<long> solve_eta(const ToricModel& model, long beta0, const Point& beta);

// The reduced GKZ operator in t, normalized by Gamma; order = volume.
std::pair<OreOperator, GKZParams> build_gkz_operator(const GammaVector& g, const std::vector<long>& eta);

// Removes pairs differing by an integer, matching by ascending fractional part then value.
std::pair<std::vector<BigRational>, std::vector<BigRational>> cancel_parameters(std::vector<BigRational> alpha,
                                                                                std::vector<BigRational> beta);

struct LocalExponents {
  std::vector<BigRational> rational;  // sorted, with multiplicity
  Polynomial residual;                // monic factor of the indicial polynomial without rational roots
};

// Roots of the indicial polynomial at t = 0; throws Error("Unsupported") when irregular.
LocalExponents local_exponents_at_zero(const OreOperator& op);

// rational roots with multiplicity of a polynomial over Q, plus the monic cofactor
LocalExponents rational_roots(const Polynomial& p);

enum class SingularityVerdict { genuine, possibly_apparent };

// Bounded-order check at t = 1: genuine if some exponent is not an integer or
// a logarithm is forced before jet order N.
SingularityVerdict apparent_singularity_probe(const OreOperator& op, int jet_order = 50);

}  // namespace hgls
