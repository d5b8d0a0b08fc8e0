#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hgls/arith.hpp"
#include "hgls/polynomial.hpp"

namespace hgls {

// Nonzero integers summing to zero.
class GammaVector {
 public:
  const std::vector<long>& entries() const { return e_; }
  std::size_t size() const { return e_.size(); }
  long operator[](std::size_t i) const { return e_[i]; }
  bool is_reduced() const;  // no two entries sum to zero
  bool is_prime() const;    // gcd of entries is 1
  long content() const;
  GammaVector negated() const;
  std::string to_string() const;  // "-5,-2,3,4"
  friend bool operator==(const GammaVector& a, const GammaVector& b) { return a.e_ == b.e_; }

 private:
  friend GammaVector make_gamma(std::vector<long> entries);
  std::vector<long> e_;
};

// Throws Error("InvalidEntry") for zero entries or length < 2, Error("SumNotZero").
GammaVector make_gamma(std::vector<long> entries);
// "c1,c2,...,cl"; throws Error("ParseError") with the offending position.
GammaVector parse_gamma(std::string_view text);

GammaVector reduce(const GammaVector& g);
GammaVector primify(const GammaVector& g);

// Q(T) as cancelled multiplicities of cyclotomic factors Phi_N.
struct FamilyParameter {
  std::map<long, long> numerator;    // from negative entries
  std::map<long, long> denominator;  // from positive entries
  Polynomial numerator_poly() const;
  Polynomial denominator_poly() const;
};

FamilyParameter family_parameter(const GammaVector& g);

struct HGParams {
  std::vector<BigRational> alpha;  // sorted, in (0,1]
  std::vector<BigRational> beta;
  std::size_t rank() const { return alpha.size(); }
};

HGParams hg_params(const GammaVector& g);
long rank(const GammaVector& g);
long volume(const GammaVector& g);
// prod gamma_j^gamma_j
BigRational gamma_constant(const GammaVector& g);

}  // namespace hgls
