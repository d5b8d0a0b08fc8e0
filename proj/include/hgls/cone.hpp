#pragma once

#include <map>
#include <vector>

#include "hgls/toric.hpp"

namespace hgls {

// Lattice point (k, m) of the cone over the polytope: m/k lies in it.
struct ConePoint {
  long k;
  Point m;
  friend auto operator<=>(const ConePoint&, const ConePoint&) = default;
};

struct FiltrationTag {
  long hodge_level;              // smallest l with the point in E^{-l}, i.e. k
  std::size_t minimal_face_dim;  // dimension of the smallest face containing m/k
  long face;                     // index into LatticePolytope::faces()
};

std::vector<ConePoint> enumerate_cone(const LatticePolytope& p, long max_pole);
std::vector<ConePoint> enumerate_cone(const ToricModel& model, long max_pole);

// Throws Error("PointOutsideCone").
FiltrationTag classify(const LatticePolytope& p, const ConePoint& q);

// in I^l: the minimal face has codimension < l
bool in_weight_piece(const FiltrationTag& tag, std::size_t d, long ell);
// in E^{-l}: k <= l
bool in_hodge_piece(const FiltrationTag& tag, long ell);

// counts of cone points with k <= d keyed by (k, minimal face dimension)
std::map<std::pair<long, std::size_t>, long> graded_generator_counts(const LatticePolytope& p);

}  // namespace hgls
