#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "hgls/gamma.hpp"
#include "hgls/toric.hpp"

namespace hgls {

// m_j - m_1 span Z^d
bool lattice_primitivity(const ToricModel& model);

struct CoveringData {
  long sign = 1;                          // normalized = sign * g permuted
  std::array<std::size_t, 4> permutation;  // normalized[i] = sign * g[permutation[i]]
  std::array<long, 4> normalized;
  bool equal_degrees = false;
  std::array<long, 4> exponents;  // of u_1..u_4 in the normalized order
  std::array<int, 4> variable;    // 1 for y_1, 2 for y_2
  long a = 0, A = 0, b = 0, B = 0, c = 0;
  long d = 1, e = 1;  // only in the equal-degrees case
  // conditions of the covering statement
  long gcd_y1 = 0, gcd_y2 = 0;
  long degree_y1 = 0, degree_y2 = 0;
  bool conditions_hold() const { return gcd_y1 == 1 && gcd_y2 == 1 && degree_y1 != degree_y2; }
  std::string case_name() const { return equal_degrees ? "equal_degrees" : "distinct_degrees"; }
};

// Throws NotQuadrilateral, OppositePair, NotPrime.
CoveringData quadrilateral_covering(const GammaVector& g);

// g, h with f = g(h), deg g, deg h >= 2, h monic without constant term; none if indecomposable
std::optional<std::pair<Polynomial, Polynomial>> decompose(const Polynomial& f);

// x^m + x^n admits no nontrivial decomposition; m <= 24.
bool indecomposable_brute(long m, long n, bool require_coprime = true);

}  // namespace hgls
