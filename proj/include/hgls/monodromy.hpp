#pragma once

#include "hgls/gamma.hpp"
#include "hgls/matrix.hpp"

namespace hgls {

// Loops satisfy hinf * h1 * h0 = 1.
struct MonodromyTriple {
  QMatrix h0, h1, hinf;
};

// Throws NotMonic; char poly of the result is p.
QMatrix companion(const Polynomial& p);

// hinf = C(q_inf), h0 = C(q_0)^{-1}, h1 = hinf^{-1} h0^{-1}; throws TrivialSystem.
MonodromyTriple levelt_triple(const GammaVector& g);

// rank(m - I)
std::size_t pseudoreflection_rank(const QMatrix& m);

}  // namespace hgls
