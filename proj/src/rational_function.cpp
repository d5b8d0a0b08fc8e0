#include "hgls/rational_function.hpp"

#include "hgls/error.hpp"

namespace hgls {

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_constant()) return a.scaled(1 / b.lead());
  return Polynomial::divmod(a, b).first;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error("DivisionByZero", "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num, den);
  if (!g.is_constant()) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  BigRational lc = den.lead();
  num_ = num.scaled(1 / lc);
  den_ = den.scaled(1 / lc);
}

RationalFunction RationalFunction::t_power(int e) {
  if (e >= 0) return RationalFunction(Polynomial::monomial(1, e));
  RationalFunction r;
  r.num_ = Polynomial(1);
  r.den_ = Polynomial::monomial(1, -e);
  return r;
}

RationalFunction RationalFunction::from_int(const IntPoly& num, const IntPoly& den) {
  return RationalFunction(Polynomial::from_int(num), Polynomial::from_int(den));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RationalFunction r;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) {
      r.num_ = a.num_ + b.num_;
      return r;
    }
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_constant()) {
    r.num_ = a.num_ * b.den_ + b.num_;
    r.den_ = b.den_;
    return r;  // already coprime
  }
  if (b.den_.is_constant()) {
    r.num_ = a.num_ + b.num_ * a.den_;
    r.den_ = a.den_;
    return r;
  }
  Polynomial g = Polynomial::gcd(a.den_, b.den_);
  if (g.is_constant()) {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    return r;
  }
  Polynomial bd = exact_quotient(b.den_, g);
  Polynomial ad = exact_quotient(a.den_, g);
  Polynomial num = a.num_ * bd + b.num_ * ad;
  // only factors of g can cancel
  return RationalFunction(std::move(num), a.den_ * bd);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalFunction r;
  if (a.den_.is_constant() && b.den_.is_constant()) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
  Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
  Polynomial n1 = exact_quotient(a.num_, g1), d2 = exact_quotient(b.den_, g1);
  Polynomial n2 = exact_quotient(b.num_, g2), d1 = exact_quotient(a.den_, g2);
  Polynomial den = d1 * d2;
  BigRational lc = den.lead();
  r.num_ = (n1 * n2).scaled(1 / lc);
  r.den_ = den.scaled(1 / lc);
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of zero rational function");
  RationalFunction r;
  BigRational lc = num_.lead();
  r.num_ = den_.scaled(1 / lc);
  r.den_ = num_.scaled(1 / lc);
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::derivative() const {
  if (den_.is_constant()) return RationalFunction(num_.derivative());
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::theta() const {
  return derivative() * RationalFunction(Polynomial::variable());
}

BigRational RationalFunction::eval(const BigRational& x) const {
  BigRational d = den_.eval(x);
  if (d == 0) throw Error("DivisionByZero", "evaluation at a pole");
  return num_.eval(x) / d;
}

int RationalFunction::valuation() const {
  if (is_zero()) throw Error("DivisionByZero", "valuation of zero");
  auto low = [](const Polynomial& p) {
    int i = 0;
    while (p.coeffs()[static_cast<std::size_t>(i)] == 0) ++i;
    return i;
  };
  return low(num_) - low(den_);
}

std::pair<IntPoly, IntPoly> RationalFunction::integer_form() const {
  auto [sn, pn] = num_.to_primitive();
  auto [sd, pd] = den_.to_primitive();
  if (num_.is_zero()) return {IntPoly(), IntPoly(1)};
  BigRational s = sn / sd;  // value = s * pn / pd
  return {pn.scaled(s.get_num()), pd.scaled(s.get_den())};
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hgls
