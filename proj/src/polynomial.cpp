#include "hgls/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hgls/error.hpp"

namespace hgls {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const BigRational& c) {
  if (c != 0) c_.push_back(c);
}

Polynomial Polynomial::monomial(const BigRational& c, int deg) {
  if (c == 0) return {};
  std::vector<BigRational> v(static_cast<std::size_t>(deg) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_int(const IntPoly& p) {
  std::vector<BigRational> v(p.coeffs().begin(), p.coeffs().end());
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const BigRational& s) const {
  if (s == 0) return {};
  Polynomial r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<BigRational> r = a.c_;
  std::vector<BigRational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  BigRational inv = 1 / b.lead();
  int db = b.degree();
  for (int i = a.degree() - db; i >= 0; --i) {
    BigRational coef = r[static_cast<std::size_t>(i + db)] * inv;
    q[static_cast<std::size_t>(i)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i + j)] -= coef * b.c_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(1 / lead());
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(r));
}

BigRational Polynomial::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(const BigRational& s) const {
  // Horner in polynomial arithmetic: p(t + s)
  Polynomial acc;
  Polynomial lin({s, BigRational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Polynomial(*it);
  return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial(1);
  auto g = IntPoly::gcd(a.to_primitive().second, b.to_primitive().second);
  return from_int(g).monic();
}

std::pair<BigRational, IntPoly> Polynomial::to_primitive() const {
  if (is_zero()) return {BigRational(0), IntPoly()};
  BigInt den = 1;
  for (const auto& x : c_) den = lcm(den, x.get_den());
  std::vector<BigInt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].get_num() * (den / c_[i].get_den());
  IntPoly p(std::move(v));
  BigInt cont = p.content();
  if (p.lead() < 0) cont = -cont;
  return {make_rational(cont, den), p.exact_div(cont)};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigRational c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigRational a = abs(c);
    if (i == 0) {
      os << hgls::to_string(a);
    } else {
      if (a != 1) os << hgls::to_string(a) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(const BigInt& c) {
  if (c != 0) c_.push_back(c);
}

IntPoly IntPoly::monomial(const BigInt& c, int deg) {
  if (c == 0) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(deg) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

int IntPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) mpz_add(c_[i].get_mpz_t(), c_[i].get_mpz_t(), o.c_[i].get_mpz_t());
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) mpz_sub(c_[i].get_mpz_t(), c_[i].get_mpz_t(), o.c_[i].get_mpz_t());
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const BigInt& s) const {
  if (s == 0) return {};
  IntPoly r = *this;
  for (auto& x : r.c_) mpz_mul(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return r;
}

IntPoly IntPoly::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.c_.resize(c_.size() + static_cast<std::size_t>(k));
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

IntPoly IntPoly::shifted_down(int k) const {
  if (is_zero() || k == 0) return *this;
  for (int i = 0; i < k; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) throw Error("InexactDivision", "shifted_down drops nonzero terms");
  return IntPoly(std::vector<BigInt>(c_.begin() + k, c_.end()));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::exact_div(const BigInt& s) const {
  if (s == 1) return *this;
  IntPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return r;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (lead() < 0) g = -g;
  return exact_div(g);
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

bool IntPoly::divides(const IntPoly& b, const IntPoly& a, IntPoly* q) {
  if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
  if (a.is_zero()) {
    if (q) *q = IntPoly();
    return true;
  }
  int da = a.degree(), db = b.degree();
  if (da < db) return false;
  std::vector<BigInt> r = a.c_;
  std::vector<BigInt> qc(static_cast<std::size_t>(da - db) + 1);
  const BigInt& lb = b.lead();
  BigInt coef;
  for (int i = da - db; i >= 0; --i) {
    BigInt& top = r[static_cast<std::size_t>(i + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(coef.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(i + j)].get_mpz_t(), coef.get_mpz_t(), b.c_[static_cast<std::size_t>(j)].get_mpz_t());
    qc[static_cast<std::size_t>(i)] = coef;
  }
  for (int j = 0; j < db; ++j)
    if (r[static_cast<std::size_t>(j)] != 0) return false;
  if (q) *q = IntPoly(std::move(qc));
  return true;
}

IntPoly IntPoly::exact_div(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!divides(b, a, &q)) throw Error("InexactDivision", "polynomial does not divide exactly");
  return q;
}

namespace {

BigInt max_norm(const IntPoly& p) {
  BigInt m = 0;
  for (const auto& x : p.coeffs())
    if (abs(x) > m) m = abs(x);
  return m;
}

// Heuristic gcd by evaluation at a large integer point; empty result means give up.
bool heuristic_gcd(const IntPoly& a, const IntPoly& b, IntPoly* out) {
  BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    BigInt h = gcd(a.eval(xi), b.eval(xi));
    std::vector<BigInt> digits;
    BigInt half = xi / 2;
    while (h != 0) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      digits.push_back(r);
      h = (h - r) / xi;
    }
    IntPoly g = IntPoly(std::move(digits)).primitive();
    if (!g.is_zero() && IntPoly::divides(g, a, nullptr) && IntPoly::divides(g, b, nullptr)) {
      *out = g;
      return true;
    }
    xi = xi * 73794 / 27011;
  }
  return false;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r = a.coeffs();
  int db = b.degree();
  const BigInt& lb = b.lead();
  int da = a.degree();
  for (int i = da; i >= db; --i) {
    BigInt top = r[static_cast<std::size_t>(i)];
    for (auto& x : r) x *= lb;
    if (top == 0) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(std::max(db, 0)));
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero() ? IntPoly() : (b.lead() < 0 ? -b : b);
  if (b.is_zero()) return a.lead() < 0 ? -a : a;
  BigInt ca = a.content(), cb = b.content();
  BigInt c = hgls::gcd(ca, cb);
  IntPoly pa = a.primitive(), pb = b.primitive();
  if (pa.degree() == 0 || pb.degree() == 0) return IntPoly(c);
  // common power of t is cheap to split off
  int v = std::min(pa.valuation(), pb.valuation());
  if (v > 0) {
    pa = pa.shifted_down(v);
    pb = pb.shifted_down(v);
  }
  IntPoly g;
  if (pa.degree() == 0 || pb.degree() == 0) {
    g = IntPoly(1);
  } else if (pa == pb) {
    g = pa;
  } else if (!heuristic_gcd(pa, pb, &g)) {
    IntPoly x = pa.degree() >= pb.degree() ? pa : pb;
    IntPoly y = pa.degree() >= pb.degree() ? pb : pa;
    while (!y.is_zero()) {
      IntPoly r = pseudo_remainder(x, y);
      x = y;
      y = r.primitive();
    }
    g = x.primitive();
  }
  return g.shifted_up(v).scaled(c);
}

}  // namespace hgls
