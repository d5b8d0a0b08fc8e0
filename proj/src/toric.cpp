#include <functional>
#include "hgls/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hgls/error.hpp"

namespace hgls {

namespace {

long to_long(const BigInt& x) {
  if (!x.fits_slong_p()) throw Error("Overflow", "integer entry too large");
  return x.get_si();
}

ToricModel model_from_matrix(const GammaVector& g, const IntMatrix& A) {
  ToricModel model{g, A, {}, {}};
  std::size_t l = g.size();
  for (std::size_t j = 0; j < l; ++j) {
    Point p;
    for (std::size_t i = 1; i + 1 < l; ++i) p.push_back(to_long(A(i, j)));
    model.m.push_back(p);
    model.k.push_back(to_long(A(l - 1, j)));
  }
  return model;
}

// affine dimension of a point set
std::size_t affine_dim(const std::vector<Point>& pts) {
  if (pts.empty()) return 0;
  QMatrix m(pts.size(), pts[0].size() + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    m(i, 0) = 1;
    for (std::size_t j = 0; j < pts[i].size(); ++j) m(i, j + 1) = pts[i][j];
  }
  return m.rank() - 1;
}

void combinations(std::size_t n, std::size_t r, std::size_t start, std::vector<std::size_t>& cur,
                  const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (cur.size() == r) {
    fn(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, r, i + 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

LaurentPolynomial ToricModel::f() const {
  LaurentPolynomial p(d());
  for (std::size_t j = 0; j < l(); ++j)
    p.add_term(m[j], RationalFunction(BigRational(gamma[j])) * RationalFunction::t_power(static_cast<int>(k[j])));
  return p;
}

LaurentPolynomial ToricModel::f_at(const std::vector<BigRational>& u) const {
  if (u.size() != l()) throw Error("DimensionMismatch", "coefficient vector length");
  LaurentPolynomial p(d());
  for (std::size_t j = 0; j < l(); ++j) p.add_term(m[j], RationalFunction(u[j]));
  return p;
}

ToricModel build_model(const GammaVector& g) {
  if (!g.is_prime()) throw Error("NotPrime", "a toric model needs a prime gamma vector");
  std::size_t l = g.size();
  if (l < 3) throw Error("InvalidInput", "a toric model needs at least three entries");
  IntMatrix row(1, l);
  for (std::size_t j = 0; j < l; ++j) row(0, j) = g[j];
  SmithForm snf = smith_normal_form(row);
  const IntMatrix& V = snf.V;
  IntVector twist = V.col(0);
  for (auto& x : twist) x *= snf.U(0, 0);

  // coordinates of the all-ones vector in the kernel basis (columns 1.. of V)
  QMatrix vinv = QMatrix(V).inverse();
  IntVector c;
  for (std::size_t i = 1; i < l; ++i) {
    BigRational s = 0;
    for (std::size_t j = 0; j < l; ++j) s += vinv(i, j);
    c.push_back(s.get_num());
  }
  // unimodular W with first row c
  IntMatrix crow(1, l - 1);
  for (std::size_t i = 0; i + 1 < l; ++i) crow(0, i) = c[i];
  SmithForm cs = smith_normal_form(crow);
  QMatrix winv = QMatrix(cs.V).inverse();
  IntMatrix W(l - 1, l - 1);
  for (std::size_t i = 0; i + 1 < l; ++i)
    for (std::size_t j = 0; j + 1 < l; ++j) W(i, j) = winv(i, j).get_num() * (i == 0 ? cs.U(0, 0) : BigInt(1));

  IntMatrix K(l - 1, l);
  for (std::size_t i = 1; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) K(i - 1, j) = V(j, i);
  IntMatrix R = W * K;
  IntMatrix A(l, l);
  for (std::size_t i = 0; i + 1 < l; ++i)
    for (std::size_t j = 0; j < l; ++j) A(i, j) = R(i, j);
  for (std::size_t j = 0; j < l; ++j) A(l - 1, j) = twist[j];
  return import_model(g, A);
}

ToricModel import_model(const GammaVector& g, const IntMatrix& A) {
  std::size_t l = g.size();
  if (l < 3) throw Error("InvalidInput", "a toric model needs at least three entries");
  if (A.rows() != l || A.cols() != l)
    throw Error("DimensionMismatch", "matrix must be " + std::to_string(l) + "x" + std::to_string(l));
  for (std::size_t j = 0; j < l; ++j)
    if (A(0, j) != 1) throw Error("RowOneNotOnes", "entry (1," + std::to_string(j + 1) + ") is not 1");
  for (std::size_t i = 1; i + 1 < l; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < l; ++j) s += A(i, j) * g[j];
    if (s != 0) throw Error("KernelConditionFailed", "row " + std::to_string(i + 1) + " is not orthogonal to gamma");
  }
  BigInt tw = 0;
  for (std::size_t j = 0; j < l; ++j) tw += A(l - 1, j) * g[j];
  if (tw != 1) throw Error("TwistConditionFailed", "gamma.k = " + tw.get_str() + ", expected 1");
  BigInt det = A.det();
  if (abs(det) != 1) throw Error("NotUnimodular", "det A = " + det.get_str());
  return model_from_matrix(g, A);
}

ToricModel translate_model(const ToricModel& model, std::size_t h) {
  std::size_t l = model.l();
  if (h >= l) throw Error("InvalidInput", "translation index out of range");
  IntMatrix A = model.A;
  for (std::size_t i = 1; i < l; ++i) {
    BigInt shift = model.A(i, h);
    for (std::size_t j = 0; j < l; ++j) A(i, j) -= shift;
  }
  return import_model(model.gamma, A);
}

// ---------------------------------------------------------------- polytope

LatticePolytope::LatticePolytope(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error("Degenerate", "empty point set");
  dim_ = points_[0].size();
  if (affine_dim(points_) != dim_) throw Error("Degenerate", "points do not span the ambient space");
  std::size_t n = points_.size();
  std::set<std::pair<std::vector<BigInt>, BigInt>> seen;
  std::vector<std::size_t> cur;
  combinations(n, dim_, 0, cur, [&](const std::vector<std::size_t>& sub) {
    // normal through the chosen points via signed maximal minors
    IntMatrix D(dim_ - 1, dim_);
    for (std::size_t r = 1; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) D(r - 1, c) = points_[sub[r]][c] - points_[sub[0]][c];
    std::vector<BigInt> normal(dim_);
    BigInt g = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
      IntMatrix minor(dim_ - 1, dim_ - 1);
      for (std::size_t r = 0; r + 1 < dim_; ++r)
        for (std::size_t cc = 0, k = 0; cc < dim_; ++cc)
          if (cc != c) minor(r, k++) = D(r, cc);
      normal[c] = (c % 2 ? -1 : 1) * minor.det();
      g = gcd(g, normal[c]);
    }
    if (g == 0) return;
    for (auto& x : normal) x /= g;
    auto dot = [&](const Point& p) {
      BigInt s = 0;
      for (std::size_t c = 0; c < dim_; ++c) s += normal[c] * p[c];
      return s;
    };
    BigInt off = dot(points_[sub[0]]);
    bool le = true, ge = true;
    for (const auto& p : points_) {
      BigInt v = dot(p);
      le = le && v <= off;
      ge = ge && v >= off;
    }
    if (!le && !ge) return;
    if (!le) {
      for (auto& x : normal) x = -x;
      off = -off;
    }
    if (!seen.insert({normal, off}).second) return;
    Facet f{normal, off, {}};
    for (std::size_t i = 0; i < n; ++i)
      if (dot(points_[i]) == off) f.points.push_back(i);
    facets_.push_back(std::move(f));
  });
  std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) { return a.points < b.points; });

  std::set<std::vector<std::size_t>> sets;
  for (const auto& f : facets_) sets.insert(f.points);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<std::size_t>> cur_sets(sets.begin(), sets.end());
    for (std::size_t i = 0; i < cur_sets.size(); ++i)
      for (std::size_t j = i + 1; j < cur_sets.size(); ++j) {
        std::vector<std::size_t> meet;
        std::set_intersection(cur_sets[i].begin(), cur_sets[i].end(), cur_sets[j].begin(), cur_sets[j].end(),
                              std::back_inserter(meet));
        if (!meet.empty() && sets.insert(meet).second) grew = true;
      }
  }
  for (const auto& s : sets) {
    std::vector<Point> pts;
    for (auto i : s) pts.push_back(points_[i]);
    faces_.push_back({affine_dim(pts), s});
  }
  std::stable_sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) { return a.dim < b.dim; });
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  faces_.push_back({dim_, all});
  for (const auto& f : faces_)
    if (f.dim == 0) vertices_.push_back(f.points[0]);
  std::sort(vertices_.begin(), vertices_.end());
}

std::vector<std::size_t> LatticePolytope::interior_points() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    bool on_facet = false;
    for (const auto& f : facets_)
      on_facet = on_facet || std::binary_search(f.points.begin(), f.points.end(), i);
    if (!on_facet) out.push_back(i);
  }
  return out;
}

bool LatticePolytope::contains(long k, const Point& m) const { return minimal_face(k, m) >= 0; }

long LatticePolytope::minimal_face(long k, const Point& m) const {
  if (m.size() != dim_) throw Error("DimensionMismatch", "point dimension");
  std::vector<std::size_t> meet;
  bool any = false;
  for (const auto& f : facets_) {
    BigInt s = 0;
    for (std::size_t c = 0; c < dim_; ++c) s += f.normal[c] * m[c];
    BigInt bound = f.offset * k;
    if (s > bound) return -1;
    if (s < bound) continue;
    if (!any) {
      meet = f.points;
      any = true;
    } else {
      std::vector<std::size_t> next;
      std::set_intersection(meet.begin(), meet.end(), f.points.begin(), f.points.end(), std::back_inserter(next));
      meet = std::move(next);
    }
  }
  if (!any) return static_cast<long>(faces_.size()) - 1;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].points == meet) return static_cast<long>(i);
  throw Error("Internal", "tight facets do not meet in a face");
}

std::vector<Point> LatticePolytope::lattice_points(long k) const {
  Point lo(dim_), hi(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    lo[c] = hi[c] = points_[0][c];
    for (const auto& p : points_) {
      lo[c] = std::min(lo[c], p[c]);
      hi[c] = std::max(hi[c], p[c]);
    }
    lo[c] *= k;
    hi[c] *= k;
  }
  std::vector<Point> out;
  Point cur = lo;
  for (;;) {
    if (contains(k, cur)) out.push_back(cur);
    std::size_t c = dim_;
    while (c > 0) {
      --c;
      if (cur[c] < hi[c]) {
        ++cur[c];
        for (std::size_t r = c + 1; r < dim_; ++r) cur[r] = lo[r];
        break;
      }
      if (c == 0) return out;
    }
    if (dim_ == 0) return out;
  }
}

LatticePolytope newton_polytope(const ToricModel& model) { return LatticePolytope(model.m); }

// ---------------------------------------------------------------- singularities

bool singular_fiber_criterion(const GammaVector& g, const std::vector<BigRational>& u) {
  if (u.size() != g.size()) throw Error("DimensionMismatch", "coefficient vector length");
  BigRational prod = 1;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (u[j] == 0) throw Error("InvalidInput", "coefficients must be nonzero");
    prod *= power(u[j], g[j]);
  }
  return prod == gamma_constant(g);
}

SingularPoint singular_point(const ToricModel& model, const std::vector<BigRational>& u) {
  if (!singular_fiber_criterion(model.gamma, u)) throw Error("CriterionFails", "prod u^gamma differs from Gamma");
  std::size_t l = model.l(), d = model.d();
  // rows m_j - m_1 with right-hand sides u_1 gamma_j / (gamma_1 u_j)
  IntMatrix B(l - 1, d);
  std::vector<BigRational> rhs;
  SingularPoint out;
  for (std::size_t j = 1; j < l; ++j) {
    Point e(d);
    for (std::size_t i = 0; i < d; ++i) {
      B(j - 1, i) = model.m[j][i] - model.m[0][i];
      e[i] = model.m[j][i] - model.m[0][i];
    }
    rhs.push_back(u[0] * model.gamma[j] / (u[j] * model.gamma[0]));
    out.exponents.push_back(e);
  }
  out.values = rhs;
  SmithForm snf = smith_normal_form(B);
  // U B V = S, so x = z^V-style substitution with z_i = prod rhs_j^U_ij
  std::vector<BigRational> z(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (snf.S(i, i) != 1) return out;
    z[i] = 1;
    for (std::size_t j = 0; j + 1 < l; ++j) z[i] *= power(rhs[j], to_long(snf.U(i, j)));
  }
  for (std::size_t i = d; i + 1 < l; ++i) {
    BigRational check = 1;
    for (std::size_t j = 0; j + 1 < l; ++j) check *= power(rhs[j], to_long(snf.U(i, j)));
    if (check != 1) return out;
  }
  out.x.assign(d, 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < d; ++c) out.x[i] *= power(z[c], to_long(snf.V(i, c)));
  out.rational = true;
  return out;
}

BigInt hessian_determinant(const ToricModel& model) {
  std::size_t d = model.d(), l = model.l();
  IntMatrix H(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t j = 0; j < l; ++j) H(a, b) += BigInt(model.m[j][a]) * model.m[j][b] * model.gamma[j];
  return H.det();
}

std::vector<FaceVerdict> quasi_regularity_check(const LatticePolytope& p) {
  std::vector<FaceVerdict> out;
  for (const auto& f : p.faces()) {
    if (f.dim == 0 || f.dim == p.dim()) continue;
    QMatrix cols(p.dim() + 1, f.points.size());
    for (std::size_t c = 0; c < f.points.size(); ++c) {
      cols(0, c) = 1;
      for (std::size_t r = 0; r < p.dim(); ++r) cols(r + 1, c) = p.points()[f.points[c]][r];
    }
    out.push_back({f.points, f.dim, cols.rank() == f.points.size()});
  }
  return out;
}

std::vector<FaceVerdict> quasi_regularity_check(const ToricModel& model) {
  return quasi_regularity_check(newton_polytope(model));
}

}  // namespace hgls
