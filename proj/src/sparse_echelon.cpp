#include "internal/sparse_echelon.hpp"

#include <algorithm>

namespace hgls::detail {

SparseRow combine(const IntPoly& a, const SparseRow& x, const IntPoly& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
      out.push_back({x[i].col, a * x[i].value});
      ++i;
    } else if (i == x.size() || y[j].col < x[i].col) {
      out.push_back({y[j].col, -(b * y[j].value)});
      ++j;
    } else {
      IntPoly v = a * x[i].value - b * y[j].value;
      if (!v.is_zero()) out.push_back({x[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  BigInt content = 0;
  int val = 1 << 30;
  for (const auto& e : row) {
    content = gcd(content, e.value.content());
    val = std::min(val, e.value.valuation());
  }
  bool flip = row.front().value.lead() < 0;
  if (content != 1 || val > 0 || flip) {
    if (flip) content = -content;
    for (auto& e : row) e.value = e.value.shifted_down(val).exact_div(content);
  }
  // polynomial content, stopping once it is constant
  IntPoly g = row.front().value;
  for (std::size_t i = 1; i < row.size() && g.degree() > 0; ++i) g = IntPoly::gcd(g, row[i].value);
  if (g.degree() > 0)
    for (auto& e : row) e.value = IntPoly::exact_div(e.value, g);
}

namespace {

void eliminate(SparseRow& row, std::size_t pos, const SparseRow& pivot) {
  const IntPoly& pc = pivot.front().value;
  IntPoly rc = row[pos].value;
  IntPoly g = IntPoly::gcd(pc, rc);
  IntPoly a = IntPoly::exact_div(pc, g);
  IntPoly b = IntPoly::exact_div(rc, g);
  row = combine(a, row, b, pivot);
}

}  // namespace

bool SparseEchelon::insert(SparseRow row) {
  make_primitive(row);
  while (!row.empty()) {
    std::size_t c = row.front().col;
    if (pivots_[c].empty()) {
      make_primitive(row);
      pivots_[c] = std::move(row);
      ++rank_;
      return true;
    }
    eliminate(row, 0, pivots_[c]);
    make_primitive(row);
  }
  return false;
}

bool SparseEchelon::reduces_to_zero(SparseRow row) const {
  make_primitive(row);
  while (!row.empty()) {
    std::size_t c = row.front().col;
    if (pivots_[c].empty()) return false;
    eliminate(row, 0, pivots_[c]);
    make_primitive(row);
  }
  return true;
}

void SparseEchelon::back_substitute() {
  for (std::size_t c = pivots_.size(); c-- > 0;) {
    SparseRow& row = pivots_[c];
    if (row.empty()) continue;
    for (;;) {
      std::size_t pos = 1;
      while (pos < row.size() && pivots_[row[pos].col].empty()) ++pos;
      if (pos == row.size()) break;
      eliminate(row, pos, pivots_[row[pos].col]);
      make_primitive(row);
    }
  }
}

}  // namespace hgls::detail
