#pragma once

#include <vector>

#include "entmono/monogamy.hpp"

namespace entmono {

/// One grid point of the first worked example: the generalized Schmidt
/// state with l0 = l3 = sqrt(2)/3, l2 = sqrt(5)/3 under k = 2,
/// omega = 1.5. lhs is the Bures measure of the A1|A2A3 cut raised to x,
/// z1 the tightened bound with exponent ratio x/y, z2 the plain power-sum
/// comparison bound.
struct Example1Row {
  double x = 0.0, y = 0.0, lhs = 0.0, z1 = 0.0, z2 = 0.0;
};

/// Grid over x in [0, 1/2] (nx points) and y in [1, 10] (ny points); all
/// measure values are recomputed from the state, never hard-coded.
std::vector<Example1Row> example1_grid(int nx, int ny);

/// One grid point of the second worked example: the W-class state under
/// k = 2, omega = 2, eta = 2. y1 is the tightened bound, y2 and y3 the
/// two comparison bounds.
struct Example2Row {
  double x = 0.0, lhs = 0.0, y1 = 0.0, y2 = 0.0, y3 = 0.0;
};

/// Grid over x in [0, 1/2] with nx points.
std::vector<Example2Row> example2_grid(int nx);

}  // namespace entmono
