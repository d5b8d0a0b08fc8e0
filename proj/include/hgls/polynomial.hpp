#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hgls/arith.hpp"

namespace hgls {

class IntPoly;

// Dense univariate polynomial over Q; coeffs()[i] multiplies t^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coeffs);
  Polynomial(const BigRational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(BigRational(c)) {}  // NOLINT

  static Polynomial monomial(const BigRational& c, int deg);
  static Polynomial variable() { return monomial(1, 1); }
  static Polynomial from_int(const IntPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(int i) const;
  const BigRational& lead() const { return c_.back(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const BigRational& s) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // a = q*b + r with deg r < deg b
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  Polynomial monic() const;
  Polynomial derivative() const;
  BigRational eval(const BigRational& x) const;
  // p(x + s)
  Polynomial shifted(const BigRational& s) const;
  Polynomial pow(unsigned e) const;

  // monic gcd; gcd(0,0) = 0
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  // p = scale * prim with prim primitive over Z and positive leading coefficient
  std::pair<BigRational, IntPoly> to_primitive() const;

  // Human readable, e.g. "t^2 - 1/2*t + 3".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

// Dense univariate polynomial over Z used by the fraction-free elimination.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(const BigInt& c);  // NOLINT
  IntPoly(long c) : IntPoly(BigInt(c)) {}  // NOLINT

  static IntPoly monomial(const BigInt& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& lead() const { return c_.back(); }
  BigInt coeff(int i) const;
  // exponent of the lowest nonzero term; -1 for zero
  int valuation() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(const BigInt& s) const;
  IntPoly shifted_up(int k) const;    // * t^k
  IntPoly shifted_down(int k) const;  // / t^k, low terms must vanish
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  BigInt content() const;  // nonnegative
  IntPoly exact_div(const BigInt& s) const;
  IntPoly primitive() const;  // content removed, sign of lead made positive
  BigInt eval(const BigInt& x) const;

  // Returns true and sets q when b divides a exactly over Z.
  static bool divides(const IntPoly& b, const IntPoly& a, IntPoly* q);
  // a / b, throws if inexact
  static IntPoly exact_div(const IntPoly& a, const IntPoly& b);
  // gcd over Z[t] with nonnegative leading coefficient
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace hgls
