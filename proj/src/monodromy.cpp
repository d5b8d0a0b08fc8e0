#include "hgls/monodromy.hpp"

#include "hgls/error.hpp"

namespace hgls {

QMatrix companion(const Polynomial& p) {
  if (p.degree() < 1) throw Error("InvalidInput", "companion matrix needs degree >= 1");
  if (p.lead() != 1) throw Error("NotMonic", "companion matrix needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  QMatrix m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p.coeff(static_cast<int>(i));
  return m;
}

MonodromyTriple levelt_triple(const GammaVector& g) {
  FamilyParameter q = family_parameter(g);
  Polynomial qinf = q.numerator_poly(), q0 = q.denominator_poly();
  if (qinf.degree() != q0.degree() || qinf.degree() < 1)
    throw Error("TrivialSystem", "family parameter has no nontrivial part");
  MonodromyTriple out;
  out.hinf = companion(qinf);
  QMatrix m0 = companion(q0);
  out.h0 = m0.inverse();
  out.h1 = out.hinf.inverse() * m0;
  return out;
}

std::size_t pseudoreflection_rank(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error("DimensionMismatch", "matrix must be square");
  return (m - QMatrix::identity(m.rows())).rank();
}

}  // namespace hgls
