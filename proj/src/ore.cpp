#include "hgls/ore.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "hgls/error.hpp"
#include "hgls/matrix.hpp"

namespace hgls {

namespace {

std::string int_poly_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coeffs()[k];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (k == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

[[noreturn]] void parse_fail(std::string_view text) {
  throw Error("ParseError", "cannot parse operator text '" + std::string(text) + "'");
}

IntPoly parse_int_poly(std::string_view s) {
  std::vector<BigInt> c;
  std::size_t i = 0;
  if (s.empty()) parse_fail(s);
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      parse_fail(s);
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    BigInt coef = 1;
    bool has_num = j > i;
    if (has_num) coef = BigInt(std::string(s.substr(i, j - i)));
    i = j;
    int deg = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_num) parse_fail(s);
      ++i;
      if (i >= s.size() || s[i] != 't') parse_fail(s);
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) parse_fail(s);
        deg = std::stoi(std::string(s.substr(i, k - i)));
        i = k;
      }
    } else if (!has_num) {
      parse_fail(s);
    }
    if (static_cast<int>(c.size()) <= deg) c.resize(deg + 1);
    c[deg] += sign * coef;
  }
  return IntPoly(std::move(c));
}

std::string coefficient_string(const RationalFunction& f) {
  auto [n, d] = f.integer_form();
  std::string out = "(" + int_poly_string(n) + ")";
  if (!(d == IntPoly(1))) out += "/(" + int_poly_string(d) + ")";
  return out;
}

RationalFunction parse_coefficient(std::string_view s) {
  auto group = [&](std::size_t& i) {
    if (i >= s.size() || s[i] != '(') parse_fail(s);
    std::size_t close = s.find(')', i);
    if (close == std::string_view::npos) parse_fail(s);
    IntPoly p = parse_int_poly(s.substr(i + 1, close - i - 1));
    i = close + 1;
    return p;
  };
  std::size_t i = 0;
  IntPoly n = group(i);
  IntPoly d(1);
  if (i < s.size() && s[i] == '/') {
    ++i;
    d = group(i);
    if (d.is_zero()) throw Error("ParseError", "zero denominator");
  }
  if (i != s.size()) parse_fail(s);
  return RationalFunction::from_int(n, d);
}

// small primes for trial factorization
const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    const unsigned long bound = 100000;
    std::vector<bool> sieve(bound + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= bound; ++p) {
      if (!sieve[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q <= bound; q += p) sieve[q] = false;
    }
    return out;
  }();
  return primes;
}

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<std::pair<BigInt, int>> factors;
  for (unsigned long p : small_primes()) {
    if (BigInt(p) * p > n) break;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(BigInt(p), e);
  }
  // a composite cofactor with two large primes is kept whole
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (auto& [p, e] : factors) {
    std::size_t count = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Polynomial falling_factorial(int j) {
  Polynomial out(1);
  for (int i = 0; i < j; ++i) out *= Polynomial::variable() - Polynomial(i);
  return out;
}

}  // namespace

OreOperator::OreOperator(std::vector<RationalFunction> coeffs) : c_(std::move(coeffs)) { trim(); }

void OreOperator::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OreOperator OreOperator::theta_power(int i) {
  std::vector<RationalFunction> c(i + 1);
  c[i] = RationalFunction(1);
  return OreOperator(std::move(c));
}

OreOperator OreOperator::from_theta_poly(const Polynomial& p) {
  std::vector<RationalFunction> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return OreOperator(std::move(c));
}

RationalFunction OreOperator::coeff(int i) const {
  if (i < 0 || i > order()) return RationalFunction();
  return c_[i];
}

OreOperator OreOperator::operator-() const {
  OreOperator r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

OreOperator operator+(const OreOperator& a, const OreOperator& b) {
  std::vector<RationalFunction> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return OreOperator(std::move(c));
}

OreOperator operator-(const OreOperator& a, const OreOperator& b) { return a + (-b); }

OreOperator operator*(const OreOperator& a, const OreOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RationalFunction> c(a.c_.size() + b.c_.size() - 1);
  for (int j = 0; j <= b.order(); ++j) {
    if (b.c_[j].is_zero()) continue;
    // theta^k(b_j) for k up to order(a)
    std::vector<RationalFunction> dk{b.c_[j]};
    for (int k = 1; k <= a.order(); ++k) dk.push_back(dk.back().theta());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int k = 0; k <= i; ++k) {
        if (dk[k].is_zero()) continue;
        c[i - k + j] += a.c_[i] * dk[k] * RationalFunction(BigRational(binomial(i, k)));
      }
    }
  }
  return OreOperator(std::move(c));
}

OreOperator OreOperator::left_scaled(const RationalFunction& f) const {
  std::vector<RationalFunction> c = c_;
  for (auto& v : c) v = f * v;
  return OreOperator(std::move(c));
}

OreOperator OreOperator::monic() const {
  if (is_zero()) return *this;
  return left_scaled(lead().inverse());
}

OreOperator OreOperator::theta_shifted(const BigRational& s) const {
  std::vector<RationalFunction> c(c_.size());
  for (int i = 0; i <= order(); ++i) {
    Polynomial p = (Polynomial::variable() + Polynomial(s)).pow(i);
    for (int k = 0; k <= p.degree(); ++k) c[k] += c_[i] * RationalFunction(p.coeff(k));
  }
  return OreOperator(std::move(c));
}

RationalFunction OreOperator::apply(const RationalFunction& f) const {
  RationalFunction out;
  RationalFunction cur = f;
  for (int i = 0; i <= order(); ++i) {
    out += c_[i] * cur;
    cur = cur.theta();
  }
  return out;
}

std::vector<std::string> OreOperator::coefficient_strings() const {
  std::vector<std::string> out;
  for (const auto& c : c_) out.push_back(coefficient_string(c));
  return out;
}

OreOperator OreOperator::from_coefficient_strings(const std::vector<std::string>& v) {
  std::vector<RationalFunction> c;
  for (const auto& s : v) c.push_back(parse_coefficient(s));
  return OreOperator(std::move(c));
}

std::string OreOperator::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= order(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coefficient_string(c_[i]) + "*TH^" + std::to_string(i);
  }
  return out;
}

OreOperator OreOperator::parse(std::string_view text) {
  if (text == "0") return {};
  std::map<int, RationalFunction> terms;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(" + ", pos);
    std::string_view term = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    std::size_t mark = term.rfind("*TH^");
    if (mark == std::string_view::npos) parse_fail(text);
    std::string_view power = term.substr(mark + 4);
    if (power.empty() || !std::all_of(power.begin(), power.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      parse_fail(text);
    int i = std::stoi(std::string(power));
    terms[i] += parse_coefficient(term.substr(0, mark));
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  std::vector<RationalFunction> c(terms.rbegin()->first + 1);
  for (auto& [i, v] : terms) c[i] = v;
  return OreOperator(std::move(c));
}

bool equal_up_to_left_unit(const OreOperator& a, const OreOperator& b) { return a.monic() == b.monic(); }

std::pair<OreOperator, OreOperator> right_divide(const OreOperator& a, const OreOperator& b) {
  if (b.is_zero()) throw Error("DivisionByZero", "right division by the zero operator");
  OreOperator q, r = a;
  while (!r.is_zero() && r.order() >= b.order()) {
    int s = r.order() - b.order();
    OreOperator term = OreOperator::theta_power(s).left_scaled(r.lead() / b.lead());
    q = q + term;
    OreOperator next = r - term * b;
    if (!next.is_zero() && next.order() >= r.order()) throw Error("Internal", "right division did not reduce order");
    r = next;
  }
  return {q, r};
}

OreOperator build_hypergeometric(const std::vector<BigRational>& alpha, const std::vector<BigRational>& beta) {
  if (alpha.size() != beta.size()) throw Error("InvalidParameters", "alpha and beta differ in length");
  Polynomial p(1), q(1);
  for (const auto& b : beta) p *= Polynomial::variable() + Polynomial(b - 1);
  for (const auto& a : alpha) q *= Polynomial::variable() + Polynomial(a);
  return OreOperator::from_theta_poly(p) - OreOperator::from_theta_poly(q).left_scaled(RationalFunction::t_power(1));
}

std::vector<long> solve_eta(const ToricModel& model, long beta0, const Point& beta) {
  const std::size_t l = model.l();
  if (beta.size() != model.d()) throw Error("DimensionMismatch", "beta has the wrong length");
  std::vector<BigRational> rhs(l);
  rhs[0] = -beta0;
  for (std::size_t i = 0; i < beta.size(); ++i) rhs[i + 1] = -beta[i];
  rhs[l - 1] = 0;
  std::vector<BigRational> x = QMatrix(model.A).solve(rhs);
  std::vector<long> eta;
  for (const auto& v : x) {
    if (!is_integer(v)) throw Error("Internal", "non-integral eta");
    eta.push_back(v.get_num().get_si());
  }
  return eta;
}

std::pair<OreOperator, GKZParams> build_gkz_operator(const GammaVector& g, const std::vector<long>& eta) {
  if (eta.size() != g.size()) throw Error("DimensionMismatch", "eta has the wrong length");
  GKZParams params;
  params.eta = eta;
  for (std::size_t i = 0; i < g.size(); ++i) {
    long gi = g[i];
    long n = std::abs(gi);
    for (long j = 0; j < n; ++j) {
      BigRational v(eta[i] - j, gi);
      v.canonicalize();
      if (gi > 0)
        params.beta_eta.push_back(v + 1);
      else
        params.alpha_eta.push_back(v);
    }
  }
  return {build_hypergeometric(params.alpha_eta, params.beta_eta), params};
}

std::pair<std::vector<BigRational>, std::vector<BigRational>> cancel_parameters(std::vector<BigRational> alpha,
                                                                                std::vector<BigRational> beta) {
  auto key = [](const BigRational& a, const BigRational& b) {
    BigRational fa = frac(a), fb = frac(b);
    if (fa != fb) return fa < fb;
    return a < b;
  };
  std::sort(alpha.begin(), alpha.end(), key);
  std::sort(beta.begin(), beta.end(), key);
  std::vector<bool> used_b(beta.size(), false);
  std::vector<BigRational> ra;
  for (const auto& a : alpha) {
    bool matched = false;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (!used_b[j] && frac(beta[j]) == frac(a)) {
        used_b[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) ra.push_back(a);
  }
  std::vector<BigRational> rb;
  for (std::size_t j = 0; j < beta.size(); ++j)
    if (!used_b[j]) rb.push_back(beta[j]);
  return {ra, rb};
}

LocalExponents rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error("InvalidParameters", "zero polynomial has no finite root set");
  LocalExponents out;
  Polynomial rest = p.monic();
  while (rest.degree() >= 1 && rest.coeff(0) == 0) {
    out.rational.emplace_back(0);
    rest = Polynomial::divmod(rest, Polynomial::variable()).first;
  }
  if (rest.degree() >= 1) {
    IntPoly ip = rest.to_primitive().second;
    std::vector<BigInt> num_divs = positive_divisors(ip.coeff(0));
    std::vector<BigInt> den_divs = positive_divisors(ip.lead());
    std::set<BigRational> tried;
    for (const auto& q : den_divs) {
      for (const auto& n : num_divs) {
        for (int sign : {1, -1}) {
          if (rest.degree() < 1) break;
          BigRational r = make_rational(sign * n, q);
          if (!tried.insert(r).second) continue;
          while (rest.degree() >= 1 && rest.eval(r) == 0) {
            out.rational.push_back(r);
            rest = Polynomial::divmod(rest, Polynomial::variable() - Polynomial(r)).first;
          }
        }
      }
    }
  }
  std::sort(out.rational.begin(), out.rational.end());
  out.residual = rest.monic();
  return out;
}

LocalExponents local_exponents_at_zero(const OreOperator& op) {
  if (op.is_zero()) throw Error("InvalidParameters", "zero operator");
  int v = 1 << 30;
  for (const auto& c : op.coeffs())
    if (!c.is_zero()) v = std::min(v, c.valuation());
  Polynomial indicial;
  std::vector<BigRational> lowest(op.order() + 1);
  for (int i = 0; i <= op.order(); ++i) {
    const RationalFunction& c = op.coeffs()[i];
    if (c.is_zero() || c.valuation() != v) continue;
    RationalFunction shifted = c * RationalFunction::t_power(-v);
    lowest[i] = shifted.eval(0);
  }
  indicial = Polynomial(lowest);
  if (indicial.degree() != op.order())
    throw Error("Unsupported", "operator is not regular singular at t = 0");
  return rational_roots(indicial);
}

SingularityVerdict apparent_singularity_probe(const OreOperator& op, int jet_order) {
  if (op.order() < 1) throw Error("InvalidParameters", "operator must have positive order");
  if (jet_order < op.order()) throw Error("InvalidParameters", "jet order below operator order");
  const int n = op.order();
  // coefficients in s = t - 1, cleared of denominators
  std::vector<Polynomial> nums, dens;
  Polynomial common(1);
  for (const auto& c : op.coeffs()) {
    nums.push_back(c.numerator().shifted(1));
    dens.push_back(c.denominator().shifted(1));
    Polynomial g = Polynomial::gcd(common, dens.back());
    common = Polynomial::divmod(common * dens.back(), g).first;
  }
  std::vector<Polynomial> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = nums[i] * Polynomial::divmod(common, dens[i]).first;

  // theta^i = sum_j q_ij(s) D^j with theta = (1+s) D
  Polynomial one_plus_s = Polynomial::variable() + Polynomial(1);
  std::vector<Polynomial> p(n + 1);
  std::vector<Polynomial> th{Polynomial(1)};
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j < static_cast<int>(th.size()); ++j) p[j] += a[i] * th[j];
    std::vector<Polynomial> next(th.size() + 1);
    for (std::size_t j = 0; j < th.size(); ++j) {
      next[j] += one_plus_s * th[j].derivative();
      next[j + 1] += one_plus_s * th[j];
    }
    th = std::move(next);
  }

  // s^n L = sum_k s^k Q_k(delta)
  int maxdeg = 0;
  for (const auto& q : p) maxdeg = std::max(maxdeg, q.degree());
  std::vector<Polynomial> Q(maxdeg + n + 1);
  for (int j = 0; j <= n; ++j) {
    Polynomial ff = falling_factorial(j);
    for (int e = 0; e <= p[j].degree(); ++e) {
      if (p[j].coeff(e) == 0) continue;
      Q[e + n - j] += ff.scaled(p[j].coeff(e));
    }
  }
  std::size_t v = 0;
  while (v < Q.size() && Q[v].is_zero()) ++v;
  if (v == Q.size() || Q[v].degree() != n) throw Error("Unsupported", "operator is not regular singular at t = 1");
  LocalExponents ex = rational_roots(Q[v]);
  if (ex.residual.degree() > 0) return SingularityVerdict::genuine;
  for (const auto& r : ex.rational)
    if (!is_integer(r)) return SingularityVerdict::genuine;
  if (std::adjacent_find(ex.rational.begin(), ex.rational.end()) != ex.rational.end())
    return SingularityVerdict::genuine;

  long lo = ex.rational.front().get_num().get_si();
  long hi = ex.rational.back().get_num().get_si();
  long top = std::max<long>(jet_order, hi + 1);
  std::size_t size = static_cast<std::size_t>(top - lo + 1);
  QMatrix sys(size, size);
  for (long e = lo; e <= top; ++e) {
    for (long k = 0; k <= e - lo && v + k < Q.size(); ++k) {
      if (Q[v + k].is_zero()) continue;
      sys(static_cast<std::size_t>(e - lo), static_cast<std::size_t>(e - k - lo)) = Q[v + k].eval(BigRational(e - k));
    }
  }
  std::size_t kernel = size - sys.rank();
  return kernel == static_cast<std::size_t>(n) ? SingularityVerdict::possibly_apparent : SingularityVerdict::genuine;
}

}  // namespace hgls
