#pragma once

#include <complex>

#include "zhardy/types.hpp"

namespace zhardy {

// High-precision reference path, deliberately independent of the fast
// evaluators: zeta(1/2+it) by Euler–Maclaurin continuation of the Dirichlet
// series, theta(t) by Stirling's series for log Gamma with argument shifting,
// all in MPFR with working precision derived from `digits`.
//
// z_oracle returns Z(t) = e^{i theta(t)} zeta(1/2+it) correct to `digits`
// significant digits (err field = 10^{-digits} * max(1, |Z|)). Accepts any
// real t (Z is even; t = 0 gives zeta(1/2)). Cost grows ~linearly with |t|.
ZValue z_oracle(double t, int digits);

// Oracle diagnostics: the imaginary part of e^{i theta} zeta(1/2+it) must
// vanish; its observed magnitude is a direct internal consistency check.
struct OracleDiag {
    double value = 0.0;      // Re, i.e. Z(t)
    double imag_mag = 0.0;   // |Im|, should be ~10^{-digits}
    double tail_bound = 0.0; // Euler–Maclaurin remainder bound actually achieved
};
OracleDiag z_oracle_diag(double t, int digits);

// zeta(1/2 + it) to `digits` digits.
ZetaValue zeta_half_oracle(double t, int digits);

// theta(t) from log Gamma(1/4 + it/2), exact branch (continuous, theta(0)=0),
// returned as double. Odd in t.
double theta_oracle(double t, int digits);

}  // namespace zhardy
