#pragma once

#include "zhardy/types.hpp"

namespace zhardy {

// Riemann–Siegel evaluation of Z(t):
//   order 0: 2 sum_{n<=m} n^{-1/2} cos(theta(t) - t log n),  m = floor(sqrt(t/2pi)),
//            err = c0 * t^{-1/4};
//   order 1: adds (-1)^{m-1} (t/2pi)^{-1/4} Psi(p), p = frac(sqrt(t/2pi)),
//            err = c1 * t^{-3/4}.
// Requires 10 <= t <= 4e6 (double-precision phase arithmetic stops supporting
// the order-1 error bound well above that; the oracle covers anything else).
ZValue z_rs(double t, int order = 1);

// The Riemann–Siegel theta-correction factor
//   Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p),
// with removable singularities at p = 1/4, 3/4 handled by the local linear
// expansion (Psi = 1/2, slope -/+ 1).
double rs_psi(double p);

}  // namespace zhardy
