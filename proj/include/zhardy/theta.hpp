#pragma once

#include "zhardy/types.hpp"

namespace zhardy {

// The Riemann–Siegel phase theta(t), defined by
//   e^{i theta(t)} = pi^{-it/2} Gamma(1/4 + it/2) / |Gamma(1/4 + it/2)|,
// evaluated through its Stirling-derived asymptotic expansion
//   theta(t) = (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3) + ...
// `order` in {0,1,2} selects how many correction terms beyond the three main
// terms are included; err bounds the omitted tail plus evaluation rounding.
// Odd by construction: theta(-t) = -theta(t). Requires |t| >= 2 when
// order > 0 (the expansion is an asymptotic series); t must be nonzero.
PhaseValue theta(double t, int order = 2);

// d theta / dt ≈ (1/2) log(t/2pi) - 1/(48 t^2); t > 0 required.
// The local oscillation frequency of Z and the zero density both scale
// with this.
double theta_deriv(double t);

}  // namespace zhardy
