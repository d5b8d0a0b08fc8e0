#pragma once

// Fraction-free row echelon over Z[t] for sparse relation matrices.

#include <cstddef>
#include <utility>
#include <vector>

#include "hgls/polynomial.hpp"

namespace hgls::detail {

struct Entry {
  std::size_t col;
  IntPoly value;
};
using SparseRow = std::vector<Entry>;  // sorted by column, no zero values

class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols) : pivots_(cols) {}

  // Reduces the row against the pivots; stores it if independent.
  bool insert(SparseRow row);
  // true when the row lies in the span of the pivots
  bool reduces_to_zero(SparseRow row) const;
  // Rewrites every pivot row so it touches no other pivot column.
  void back_substitute();

  std::size_t cols() const { return pivots_.size(); }
  bool is_pivot(std::size_t c) const { return !pivots_[c].empty(); }
  const SparseRow& pivot_row(std::size_t c) const { return pivots_[c]; }
  std::size_t rank() const { return rank_; }

 private:
  std::vector<SparseRow> pivots_;
  std::size_t rank_ = 0;
};

// a * x - b * y
SparseRow combine(const IntPoly& a, const SparseRow& x, const IntPoly& b, const SparseRow& y);
// removes the polynomial content and fixes the sign of the first entry
void make_primitive(SparseRow& row);

}  // namespace hgls::detail
