#pragma once

#include "zhardy/types.hpp"

namespace zhardy {

// Truncated Dirichlet polynomial for zeta on the critical line:
//   zeta(1/2 + it) ~ sum_{n <= T} n^{-1/2-it} + T^{1/2-it}/(it - 1/2),
// valid for T <= t <= 2T with error O(T^{-1/2}). err = c2 * T^{-1/2} with
// the calibrated c2. Complements z_rs through |Z(t)| = |zeta(1/2+it)|.
ZetaValue zeta_dirichlet(double t, double T);

}  // namespace zhardy
