#pragma once

#include <map>
#include <string>
#include <vector>

#include "hgls/rational_function.hpp"

namespace hgls {

using Exponent = std::vector<long>;

// Sparse Laurent polynomial in x-variables with Q(t) coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, RationalFunction>& terms() const { return terms_; }
  RationalFunction coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const RationalFunction& c);
  bool is_zero() const { return terms_.empty(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial scaled(const RationalFunction& c) const;
  LaurentPolynomial pow(unsigned e) const;
  // x_i * d/dx_i
  LaurentPolynomial euler_derivative(std::size_t i) const;
  // t * d/dt applied to the coefficients
  LaurentPolynomial theta_t() const;
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, RationalFunction> terms_;
};

}  // namespace hgls
