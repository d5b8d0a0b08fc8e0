#pragma once

#include "hgls/toric.hpp"

namespace hgls::testing {

inline ToricModel curve_model() {
  return import_model(make_gamma({-5, -2, 3, 4}), IntMatrix{{1, 1, 1, 1}, {2, 0, 2, 1}, {0, 3, 2, 0}, {0, 1, 1, 0}});
}

inline ToricModel chebyshev_model() {
  return import_model(make_gamma({-30, -1, 6, 10, 15}), IntMatrix{{1, 1, 1, 1, 1},
                                                                   {1, 0, 5, 0, 0},
                                                                   {1, 0, 0, 3, 0},
                                                                   {1, 0, 0, 0, 2},
                                                                   {0, -1, 0, 0, 0}});
}

}  // namespace hgls::testing
