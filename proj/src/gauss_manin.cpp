#include "hgls/gauss_manin.hpp"

#include <algorithm>
#include <sstream>

#include "hgls/error.hpp"
#include "hgls/matrix.hpp"
#include "internal/sparse_echelon.hpp"

namespace hgls {

using detail::SparseEchelon;
using detail::SparseRow;

std::string MonomialForm::to_string() const {
  std::string out = std::to_string(beta0) + ";";
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(beta[i]);
  }
  return out;
}

MonomialForm parse_form(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw Error("ParseError", "form must look like 'beta0;b1,...,bd'");
  auto parse_long = [&](std::string_view s) {
    std::string str(s);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(str, &used);
    } catch (const std::exception&) {
      throw Error("ParseError", "bad integer '" + str + "' in form");
    }
    if (used != str.size()) throw Error("ParseError", "bad integer '" + str + "' in form");
    return v;
  };
  MonomialForm f{parse_long(text.substr(0, semi)), {}};
  std::string_view rest = text.substr(semi + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    f.beta.push_back(parse_long(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return f;
}

void CohomologyClass::add(const MonomialForm& f, const RationalFunction& c) {
  auto& slot = terms_[f];
  slot += c;
  if (slot.is_zero()) terms_.erase(f);
}

long CohomologyClass::max_pole() const {
  long k = 0;
  for (const auto& [f, c] : terms_) k = std::max(k, f.beta0);
  return k;
}

const Coordinates& CohomologyBasis::coordinates(const MonomialForm& f) const {
  if (f.beta0 > max_pole_) throw Error("UnreducibleForm", "pole order " + std::to_string(f.beta0) + " above the table");
  auto it = table_.find(ConePoint{f.beta0, f.beta});
  if (it == table_.end()) throw Error("PointOutsideCone", "form " + f.to_string() + " is not in the cone");
  return it->second;
}

namespace {

Point add_points(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Lower sort key first: pole order, larger minimal face, then m.
struct Candidate {
  ConePoint point;
  std::size_t face_dim;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.point.k != b.point.k) return a.point.k < b.point.k;
  if (a.face_dim != b.face_dim) return a.face_dim > b.face_dim;
  return a.point.m < b.point.m;
}

std::size_t exchange_index(const GammaVector& g) {
  std::size_t r = 0;
  for (std::size_t j = 1; j < g.size(); ++j)
    if (std::abs(g[j]) < std::abs(g[r])) r = j;
  return r;
}

Coordinates zero_coordinates(std::size_t n) { return Coordinates(n); }

void axpy(Coordinates& y, const RationalFunction& a, const Coordinates& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

}  // namespace

CohomologyBasis build_basis(const ToricModel& model, long max_pole) {
  const long d = static_cast<long>(model.d());
  if (d < 1) throw Error("DegenerateModel", "fibre dimension must be positive");
  if (max_pole == 0) max_pole = d + 1;
  if (max_pole < d + 1) throw Error("InvalidInput", "table must reach pole order d + 1");
  CohomologyBasis out;
  out.model_ = model;
  out.polytope_ = newton_polytope(model);
  out.max_pole_ = max_pole;
  const auto& poly = out.polytope_;

  std::vector<Candidate> cands;
  for (auto& q : enumerate_cone(poly, max_pole)) cands.push_back({q, classify(poly, q).minimal_face_dim});
  std::sort(cands.begin(), cands.end(), candidate_less);
  const std::size_t n = cands.size();
  std::map<ConePoint, std::size_t> column;  // reversed candidate order
  for (std::size_t i = 0; i < n; ++i) column[cands[i].point] = n - 1 - i;

  // exchange relations: for j != r,
  // lambda_j w_p - k g_j t^{k_j} w_{p+a_j} + k g_j t^{k_r} w_{p+a_r}, lambda = B_r^{-1} p
  const GammaVector& g = model.gamma;
  const std::size_t l = model.l();
  const std::size_t r = exchange_index(g);
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < l; ++j)
    if (j != r) others.push_back(j);
  QMatrix B(static_cast<std::size_t>(d + 1), static_cast<std::size_t>(d + 1));
  for (std::size_t c = 0; c < others.size(); ++c) {
    B(0, c) = 1;
    for (long i = 0; i < d; ++i) B(static_cast<std::size_t>(i + 1), c) = model.m[others[c]][static_cast<std::size_t>(i)];
  }
  QMatrix Binv = B.inverse();
  const BigInt scale = std::abs(g[r]);

  SparseEchelon ech(n);
  for (const auto& cand : cands) {
    const ConePoint& p = cand.point;
    if (p.k >= max_pole) continue;
    std::vector<BigRational> pv{BigRational(p.k)};
    for (long x : p.m) pv.emplace_back(x);
    std::vector<BigRational> lambda = Binv.apply(pv);
    std::size_t col_r = column.at({p.k + 1, add_points(p.m, model.m[r])});
    for (std::size_t c = 0; c < others.size(); ++c) {
      std::size_t j = others[c];
      long shift = -std::min({0L, model.k[j], model.k[r]});
      BigRational lam = lambda[c] * scale;
      BigInt kg = BigInt(p.k) * g[j] * scale;
      std::vector<std::pair<std::size_t, IntPoly>> entries;
      if (lam != 0) entries.emplace_back(column.at(p), IntPoly::monomial(lam.get_num(), static_cast<int>(shift)));
      entries.emplace_back(column.at({p.k + 1, add_points(p.m, model.m[j])}),
                           IntPoly::monomial(-kg, static_cast<int>(model.k[j] + shift)));
      entries.emplace_back(col_r, IntPoly::monomial(kg, static_cast<int>(model.k[r] + shift)));
      std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseRow row;
      for (auto& [col, v] : entries) row.push_back({col, std::move(v)});
      ech.insert(std::move(row));
    }
  }
  ech.back_substitute();

  std::vector<std::size_t> basis_index(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t col = n - 1 - i;
    if (ech.is_pivot(col)) continue;
    if (cands[i].point.k > d)
      throw Error("UnreducibleForm", "a pole order " + std::to_string(cands[i].point.k) + " form is not reducible");
    basis_index[col] = out.basis_.size();
    out.basis_.push_back({cands[i].point.k, cands[i].point.m});
  }
  const std::size_t dim = out.basis_.size();
  if (dim == 0) throw Error("DegenerateModel", "the quotient is zero");

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t col = n - 1 - i;
    Coordinates v = zero_coordinates(dim);
    if (!ech.is_pivot(col)) {
      v[basis_index[col]] = RationalFunction(1);
    } else {
      const SparseRow& row = ech.pivot_row(col);
      const IntPoly& lead = row.front().value;
      for (std::size_t e = 1; e < row.size(); ++e)
        v[basis_index[row[e].col]] = RationalFunction::from_int(-row[e].value, lead);
    }
    out.table_.emplace(cands[i].point, std::move(v));
  }

  for (const auto& f : out.basis_) {
    Coordinates v = zero_coordinates(dim);
    for (std::size_t j = 0; j < l; ++j) {
      if (model.k[j] == 0) continue;
      RationalFunction c = RationalFunction::t_power(static_cast<int>(model.k[j])) *
                           RationalFunction(BigRational(-f.beta0 * model.k[j] * g[j]));
      axpy(v, c, out.table_.at({f.beta0 + 1, add_points(f.beta, model.m[j])}));
    }
    out.theta_.push_back(std::move(v));
  }
  return out;
}

CohomologyClass apply_D(const ToricModel& model, std::size_t i, long k, const Point& m) {
  if (i > model.d()) throw Error("InvalidInput", "direction index out of range");
  if (k < 1) throw Error("PointOutsideCone", "pole order must be positive");
  if (!newton_polytope(model).contains(k, m)) throw Error("PointOutsideCone", "point is not in the cone");
  // divided by (-1)^(k-1) (k-1)!
  CohomologyClass c;
  BigRational own = i == 0 ? BigRational(k) : BigRational(m[i - 1]);
  c.add({k, m}, RationalFunction(own));
  for (std::size_t j = 0; j < model.l(); ++j) {
    long weight = i == 0 ? 1 : model.m[j][i - 1];
    if (weight == 0) continue;
    c.add({k + 1, add_points(m, model.m[j])},
          RationalFunction::t_power(static_cast<int>(model.k[j])) * RationalFunction(BigRational(-k * weight * model.gamma[j])));
  }
  return c;
}

Coordinates reduce_class(const CohomologyBasis& basis, const CohomologyClass& c) {
  const ToricModel& model = basis.model();
  if (!basis.covers(c.max_pole())) {
    CohomologyBasis bigger = build_basis(model, c.max_pole());
    if (bigger.basis() != basis.basis()) throw Error("Internal", "basis changed with the table size");
    return reduce_class(bigger, c);
  }
  Coordinates out = zero_coordinates(basis.dimension());
  for (const auto& [f, coef] : c.terms()) {
    if (f.beta.size() != model.d()) throw Error("DimensionMismatch", "form has the wrong dimension");
    if (f.beta0 == 0) {
      if (std::any_of(f.beta.begin(), f.beta.end(), [](long x) { return x != 0; }))
        throw Error("PointOutsideCone", "pole order 0 is only allowed for dx/x");
      // dx/x = f / f dx/x
      for (std::size_t j = 0; j < model.l(); ++j)
        axpy(out, coef * RationalFunction::t_power(static_cast<int>(model.k[j])) * RationalFunction(model.gamma[j]),
             basis.coordinates({1, model.m[j]}));
      continue;
    }
    if (f.beta0 < 0) throw Error("PointOutsideCone", "negative pole order");
    axpy(out, coef, basis.coordinates(f));
  }
  return out;
}

Coordinates theta_coordinates(const CohomologyBasis& basis, const Coordinates& v) {
  Coordinates out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    out[i] += v[i].theta();
    axpy(out, v[i], basis.theta_matrix()[i]);
  }
  return out;
}

Coordinates gauss_manin_theta(const CohomologyBasis& basis, const CohomologyClass& c) {
  // theta(x^b / f^k) = -k x^b (theta f) / f^(k+1)
  const ToricModel& model = basis.model();
  CohomologyClass image;
  for (const auto& [f, coef] : c.terms()) {
    image.add(f, coef.theta());
    if (f.beta0 == 0) continue;
    for (std::size_t j = 0; j < model.l(); ++j) {
      if (model.k[j] == 0) continue;
      image.add({f.beta0 + 1, add_points(f.beta, model.m[j])},
                coef * RationalFunction::t_power(static_cast<int>(model.k[j])) *
                    RationalFunction(BigRational(-f.beta0 * model.k[j] * model.gamma[j])));
    }
  }
  return reduce_class(basis, image);
}

WeightEigenvalues weight_theta_eigenvalues(const ToricModel& model, const MonomialForm& f) {
  LatticePolytope poly = newton_polytope(model);
  if (f.beta0 < 1) throw Error("PointOutsideCone", "pole order must be positive");
  long face = poly.minimal_face(f.beta0, f.beta);
  if (face < 0) throw Error("PointOutsideCone", "form is not in the cone");
  const Face& F = poly.faces()[static_cast<std::size_t>(face)];
  if (F.dim == poly.dim()) throw Error("InteriorPoint", "form " + f.to_string() + " is interior");
  // columns (1, m_j) over the face are independent; solve the normal equations
  const std::size_t rows = model.d() + 1, cols = F.points.size();
  QMatrix M(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    M(0, c) = 1;
    for (std::size_t i = 0; i < model.d(); ++i) M(i + 1, c) = model.m[F.points[c]][i];
  }
  std::vector<BigRational> b{BigRational(1)};
  for (long x : f.beta) b.push_back(make_rational(x, f.beta0));
  QMatrix N(cols, cols);
  std::vector<BigRational> rhs(cols);
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t i = 0; i < rows; ++i) N(a, c) += M(i, a) * M(i, c);
    for (std::size_t i = 0; i < rows; ++i) rhs[a] += M(i, a) * b[i];
  }
  std::vector<BigRational> sol = N.solve(rhs);
  WeightEigenvalues out;
  out.mu.assign(model.l(), 0);
  out.d.assign(model.l(), 0);
  out.t_eigenvalue = 0;
  for (std::size_t c = 0; c < cols; ++c) out.mu[F.points[c]] = sol[c];
  for (std::size_t j = 0; j < model.l(); ++j) {
    out.d[j] = -f.beta0 * out.mu[j];
    out.t_eigenvalue += model.k[j] * out.d[j];
  }
  return out;
}

namespace {

// Solves sum_j x_j v_j = target when possible, by elimination over Q(t).
bool solve_in_span(const std::vector<Coordinates>& vs, const Coordinates& target, std::vector<RationalFunction>& x) {
  const std::size_t rows = target.size(), cols = vs.size();
  std::vector<std::vector<RationalFunction>> m(rows, std::vector<RationalFunction>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = vs[j][i];
    m[i][cols] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    RationalFunction inv = m[row][c].inverse();
    for (std::size_t k = c; k <= cols; ++k) m[row][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][c].is_zero()) continue;
      RationalFunction f = m[i][c];
      for (std::size_t k = c; k <= cols; ++k)
        if (!m[row][k].is_zero()) m[i][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (!m[i][cols].is_zero()) return false;
  x.assign(cols, RationalFunction());
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][cols];
  return true;
}

bool is_zero_vector(const Coordinates& v) {
  return std::all_of(v.begin(), v.end(), [](const RationalFunction& x) { return x.is_zero(); });
}

}  // namespace

OreOperator minimal_operator(const CohomologyBasis& basis, const CohomologyClass& c) {
  std::vector<Coordinates> iterates{reduce_class(basis, c)};
  if (is_zero_vector(iterates[0])) throw Error("ZeroClass", "the class is exact");
  for (std::size_t order = 1; order <= basis.dimension(); ++order) {
    Coordinates next = theta_coordinates(basis, iterates.back());
    std::vector<RationalFunction> x;
    if (solve_in_span(iterates, next, x)) {
      std::vector<RationalFunction> coeffs(order + 1);
      for (std::size_t j = 0; j < order; ++j) coeffs[j] = -x[j];
      coeffs[order] = RationalFunction(1);
      return OreOperator(std::move(coeffs));
    }
    iterates.push_back(std::move(next));
  }
  throw Error("Internal", "no dependence among theta iterates");
}

namespace {

SparseRow integer_row(const Coordinates& v) {
  Polynomial den(1);
  for (const auto& x : v)
    if (!x.is_zero()) den = Polynomial::divmod(den * x.denominator(), Polynomial::gcd(den, x.denominator())).first;
  std::vector<Polynomial> nums(v.size());
  BigInt scale = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    nums[i] = v[i].numerator() * Polynomial::divmod(den, v[i].denominator()).first;
    for (const auto& c : nums[i].coeffs()) scale = lcm(scale, c.get_den());
  }
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (nums[i].is_zero()) continue;
    std::vector<BigInt> c;
    for (const auto& x : nums[i].coeffs()) c.push_back(BigInt(x * scale));
    row.push_back({i, IntPoly(std::move(c))});
  }
  return row;
}

}  // namespace

struct QtSpan::Impl {
  explicit Impl(std::size_t n) : ech(n) {}
  SparseEchelon ech;
};

QtSpan::QtSpan(std::size_t n) : impl_(std::make_unique<Impl>(n)) {}
QtSpan::~QtSpan() = default;
QtSpan::QtSpan(QtSpan&&) noexcept = default;
QtSpan& QtSpan::operator=(QtSpan&&) noexcept = default;

bool QtSpan::add(const Coordinates& v) {
  if (impl_->ech.rank() == impl_->ech.cols()) return false;
  return impl_->ech.insert(integer_row(v));
}

bool QtSpan::contains(const Coordinates& v) const { return impl_->ech.reduces_to_zero(integer_row(v)); }

std::size_t QtSpan::rank() const { return impl_->ech.rank(); }

std::size_t rank_over_qt(const std::vector<Coordinates>& vectors) {
  if (vectors.empty()) return 0;
  QtSpan span(vectors.front().size());
  for (const auto& v : vectors) span.add(v);
  return span.rank();
}

std::size_t weight_graded_dimension(const CohomologyBasis& basis, long weight_level) {
  const long d = static_cast<long>(basis.model().d());
  long j = weight_level - d;
  if (j <= 0) return 0;
  if (j >= d) return basis.dimension();
  std::vector<Coordinates> vs;
  for (const auto& q : enumerate_cone(basis.polytope(), basis.max_pole())) {
    FiltrationTag tag = classify(basis.polytope(), q);
    if (in_weight_piece(tag, static_cast<std::size_t>(d), j)) vs.push_back(basis.coordinates({q.k, q.m}));
  }
  return rank_over_qt(vs);
}

}  // namespace hgls
