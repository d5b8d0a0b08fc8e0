#include "hgls/laurent.hpp"

#include <sstream>

#include "hgls/error.hpp"

namespace hgls {

RationalFunction LaurentPolynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const RationalFunction& c) {
  if (e.size() != nvars_) throw Error("DimensionMismatch", "exponent length differs from variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.nvars_ != b.nvars_) throw Error("DimensionMismatch", "Laurent product");
  LaurentPolynomial r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const RationalFunction& c) const {
  LaurentPolynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial r(nvars_);
  r.add_term(Exponent(nvars_, 0), RationalFunction(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

LaurentPolynomial LaurentPolynomial::euler_derivative(std::size_t i) const {
  LaurentPolynomial r(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[i] != 0) r.terms_.emplace(e, c * RationalFunction(BigRational(e[i])));
  return r;
}

LaurentPolynomial LaurentPolynomial::theta_t() const {
  LaurentPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.add_term(e, c.theta());
  return r;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) os << "*x" << (i + 1) << (e[i] != 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

}  // namespace hgls
