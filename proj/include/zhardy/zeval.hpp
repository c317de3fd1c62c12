#pragma once

#include "zhardy/types.hpp"

namespace zhardy {

// Front-door Z(t) evaluation: Riemann-Siegel order 1 on its fast domain,
// silently routed to the multiprecision oracle outside it (|t| < 10 or
// |t| > 4e6). Z is even, so negative t evaluates at |t|.
ZValue z_eval(double t);

}  // namespace zhardy
