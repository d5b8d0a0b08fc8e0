#pragma once

#include <string>
#include <vector>

#include "hgls/arith.hpp"
#include "hgls/polynomial.hpp"

namespace hgls {

using IntVector = std::vector<BigInt>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  // fraction-free Bareiss determinant
  BigInt det() const;
  std::size_t rank() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row_i += c * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const BigInt& c);
  void add_col_multiple(std::size_t i, std::size_t j, const BigInt& c);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

struct SmithForm {
  IntMatrix U, S, V;  // U * m * V = S
  std::vector<BigInt> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Basis of the saturated lattice {x : v.x = 0}; l-1 vectors.
std::vector<IntVector> kernel_basis(const IntVector& v);

// Dense matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  explicit QMatrix(const IntMatrix& m);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigRational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::size_t rank() const;
  BigRational det() const;
  QMatrix inverse() const;  // throws Error("Singular") when not invertible
  std::vector<BigRational> solve(const std::vector<BigRational>& b) const;
  std::vector<BigRational> apply(const std::vector<BigRational>& x) const;
  // det(T*I - m)
  Polynomial charpoly() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigRational> a_;
};

}  // namespace hgls
