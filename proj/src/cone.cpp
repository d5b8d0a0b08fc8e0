#include "hgls/cone.hpp"

#include "hgls/error.hpp"

namespace hgls {

std::vector<ConePoint> enumerate_cone(const LatticePolytope& p, long max_pole) {
  if (max_pole < 1) throw Error("InvalidInput", "pole order bound must be positive");
  std::vector<ConePoint> out;
  for (long k = 1; k <= max_pole; ++k)
    for (auto& m : p.lattice_points(k)) out.push_back({k, std::move(m)});
  return out;
}

std::vector<ConePoint> enumerate_cone(const ToricModel& model, long max_pole) {
  return enumerate_cone(newton_polytope(model), max_pole);
}

FiltrationTag classify(const LatticePolytope& p, const ConePoint& q) {
  if (q.k < 1) throw Error("PointOutsideCone", "pole order must be positive");
  long f = p.minimal_face(q.k, q.m);
  if (f < 0) throw Error("PointOutsideCone", "m/k is not in the polytope");
  return {q.k, p.faces()[static_cast<std::size_t>(f)].dim, f};
}

bool in_weight_piece(const FiltrationTag& tag, std::size_t d, long ell) {
  return static_cast<long>(d - tag.minimal_face_dim) < ell;
}

bool in_hodge_piece(const FiltrationTag& tag, long ell) { return tag.hodge_level <= ell; }

std::map<std::pair<long, std::size_t>, long> graded_generator_counts(const LatticePolytope& p) {
  std::map<std::pair<long, std::size_t>, long> counts;
  for (const auto& q : enumerate_cone(p, static_cast<long>(p.dim()))) {
    auto tag = classify(p, q);
    counts[{q.k, tag.minimal_face_dim}] += 1;
  }
  return counts;
}

}  // namespace hgls
