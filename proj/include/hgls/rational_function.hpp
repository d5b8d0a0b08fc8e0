#pragma once

#include <string>
#include <utility>

#include "hgls/polynomial.hpp"

namespace hgls {

// Element of Q(t) in lowest terms with a monic denominator, so structural
// equality is mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);                    // NOLINT
  RationalFunction(const BigRational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(BigRational(c)) {}              // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  // t^e for any integer e
  static RationalFunction t_power(int e);
  static RationalFunction from_int(const IntPoly& num, const IntPoly& den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const;
  RationalFunction derivative() const;
  // t * d/dt
  RationalFunction theta() const;
  BigRational eval(const BigRational& x) const;
  // order of vanishing at t = 0 (negative for poles); zero has no order and throws
  int valuation() const;

  // Canonical integer form num/den: integer coefficients, coprime contents,
  // denominator with positive leading coefficient.
  std::pair<IntPoly, IntPoly> integer_form() const;

  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace hgls
