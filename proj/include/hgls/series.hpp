#pragma once

#include <vector>

#include "hgls/gamma.hpp"
#include "hgls/ore.hpp"

namespace hgls {

// c_0 + c_1 t + ... + c_N t^N
struct TruncatedSeries {
  std::vector<BigRational> coeffs;
  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

// prod (alpha_i)_k / prod (beta_i)_k; throws ZeroPochhammer
TruncatedSeries hg_series(const std::vector<BigRational>& alpha, const std::vector<BigRational>& beta, std::size_t N);

// (-1)^(g_neg h) multinomial(-g_neg h; g_i h) Gamma^h; throws MultipleNegativeEntries
TruncatedSeries constant_term_series(const GammaVector& g, std::size_t N);

// series of a rational function regular at 0 (exact long division); throws PoleAtZero
TruncatedSeries expand(const RationalFunction& f, std::size_t N);

struct AnnihilationVerdict {
  bool annihilated;
  std::size_t checked;       // output coefficients inspected
  long first_nonzero = -1;   // index of the first nonvanishing coefficient
};

// Applies op to the series; throws InsufficientTruncation when N < order + 5.
AnnihilationVerdict annihilation_check(const OreOperator& op, const TruncatedSeries& s);

}  // namespace hgls
