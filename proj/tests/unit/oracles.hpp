#pragma once

// Independent reference computations used to freeze expected values.

#include <functional>
#include <vector>

#include "hgls/matrix.hpp"
#include "hgls/toric.hpp"

namespace hgls::testing {

// q/k in conv(points) via Caratheodory: some simplex of affinely independent
// points contains it with nonnegative barycentric coordinates.
inline bool hull_contains(const std::vector<Point>& pts, long k, const Point& q) {
  std::size_t d = q.size(), n = pts.size();
  std::vector<std::size_t> cur;
  bool found = false;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (found) return;
    if (cur.size() == d + 1) {
      QMatrix m(d + 1, d + 1);
      for (std::size_t c = 0; c <= d; ++c) {
        m(0, c) = 1;
        for (std::size_t r = 0; r < d; ++r) m(r + 1, c) = pts[cur[c]][r];
      }
      if (m.rank() < d + 1) return;
      std::vector<BigRational> rhs(d + 1);
      rhs[0] = k;
      for (std::size_t r = 0; r < d; ++r) rhs[r + 1] = q[r];
      auto lam = m.solve(rhs);
      bool ok = true;
      for (const auto& x : lam) ok = ok && x >= 0;
      found = ok;
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return found;
}

inline std::size_t ehrhart_bruteforce(const std::vector<Point>& pts, long k) {
  std::size_t d = pts[0].size();
  Point lo(d), hi(d);
  for (std::size_t c = 0; c < d; ++c) {
    lo[c] = hi[c] = pts[0][c];
    for (const auto& p : pts) {
      lo[c] = std::min(lo[c], p[c]);
      hi[c] = std::max(hi[c], p[c]);
    }
  }
  std::size_t count = 0;
  Point cur(d);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == d) {
      count += hull_contains(pts, k, cur) ? 1 : 0;
      return;
    }
    for (long v = k * lo[c]; v <= k * hi[c]; ++v) {
      cur[c] = v;
      rec(c + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace hgls::testing
