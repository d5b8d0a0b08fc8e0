#include "hgls/matrix.hpp"

#include <sstream>

#include "hgls/error.hpp"

namespace hgls {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("InvalidInput", "ragged matrix literal");
    for (long x : r) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error("InvalidInput", "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("DimensionMismatch", "matrix product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

BigInt IntMatrix::det() const {
  if (rows_ != cols_) throw Error("DimensionMismatch", "determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const { return QMatrix(*this).rank(); }

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const BigInt& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const BigInt& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<BigInt> SmithForm::invariant_factors() const {
  std::vector<BigInt> f;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) f.push_back(S(i, i));
  return f;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  SmithForm out{IntMatrix::identity(r), m, IntMatrix::identity(c)};
  IntMatrix& S = out.S;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // bring the smallest nonzero entry of the trailing block to (t,t)
    auto place_min = [&](bool whole_block) {
      std::size_t bi = r, bj = c;
      BigInt best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (S(i, j) != 0 && (best == 0 || abs(S(i, j)) < best)) {
            best = abs(S(i, j));
            bi = i;
            bj = j;
          }
        }
      if (bi == r) return false;
      S.swap_rows(t, bi);
      U.swap_rows(t, bi);
      S.swap_cols(t, bj);
      V.swap_cols(t, bj);
      return true;
    };
    if (!place_min(true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (S(i, t) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        S.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (S(t, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        S.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        place_min(false);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            S.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < r; ++j) U(t, j) = -U(t, j);
    }
  }
  return out;
}

std::vector<IntVector> kernel_basis(const IntVector& v) {
  bool zero = true;
  for (const auto& x : v) zero = zero && x == 0;
  if (zero) throw Error("ZeroVector", "kernel_basis of the zero vector");
  IntMatrix row(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) row(0, j) = v[j];
  SmithForm snf = smith_normal_form(row);
  std::vector<IntVector> basis;
  for (std::size_t j = 1; j < v.size(); ++j) basis.push_back(snf.V.col(j));
  return basis;
}

// --------------------------------------------------------------------- QMatrix

QMatrix::QMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("DimensionMismatch", "matrix product");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigRational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  QMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  QMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

namespace {

// In-place row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(QMatrix& m, int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      BigRational f = m(i, col) / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t QMatrix::rank() const {
  QMatrix m = *this;
  return echelon(m).size();
}

BigRational QMatrix::det() const {
  if (rows_ != cols_) throw Error("DimensionMismatch", "determinant of non-square matrix");
  QMatrix m = *this;
  int sign = 1;
  if (echelon(m, &sign).size() < rows_) return 0;
  BigRational d = sign;
  for (std::size_t i = 0; i < rows_; ++i) d *= m(i, i);
  return d;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw Error("DimensionMismatch", "inverse of non-square matrix");
  std::size_t n = rows_;
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug(p, col) == 0) ++p;
    if (p == n) throw Error("Singular", "matrix is not invertible");
    if (p != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(col, j));
    BigRational inv = 1 / aug(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug(i, col) == 0) continue;
      BigRational f = aug(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  QMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

std::vector<BigRational> QMatrix::solve(const std::vector<BigRational>& b) const { return inverse().apply(b); }

std::vector<BigRational> QMatrix::apply(const std::vector<BigRational>& x) const {
  if (x.size() != cols_) throw Error("DimensionMismatch", "matrix-vector product");
  std::vector<BigRational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

Polynomial QMatrix::charpoly() const {
  if (rows_ != cols_) throw Error("DimensionMismatch", "charpoly of non-square matrix");
  const std::size_t n = rows_;
  // reduce to upper Hessenberg form by similarity
  QMatrix H = *this;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && H(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t c = 0; c < n; ++c) std::swap(H(piv, c), H(m, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(H(r, piv), H(r, m));
    }
    for (std::size_t r = m + 1; r < n; ++r) {
      if (H(r, m - 1) == 0) continue;
      BigRational u = H(r, m - 1) / H(m, m - 1);
      for (std::size_t c = 0; c < n; ++c) H(r, c) -= u * H(m, c);
      for (std::size_t c = 0; c < n; ++c) H(c, m) += u * H(c, r);
    }
  }
  const Polynomial T(std::vector<BigRational>{0, 1});
  std::vector<Polynomial> p{Polynomial(1)};
  for (std::size_t m = 0; m < n; ++m) {
    Polynomial next = (T - Polynomial(H(m, m))) * p[m];
    BigRational sub = 1;
    for (std::size_t i = m; i-- > 0;) {
      sub *= H(i + 1, i);
      if (sub == 0) break;
      if (H(i, m) != 0) next = next - p[i].scaled(H(i, m) * sub);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

}  // namespace hgls
