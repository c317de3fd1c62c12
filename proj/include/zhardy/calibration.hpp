#pragma once

namespace zhardy::cal {

// Truncation-error coefficients for the fast evaluators, measured once
// against the Euler–Maclaurin oracle on a fixed sample (seed 1, 10^4
// log-uniform t in [10^2, 10^6]) by tools/calibrate_rs, then frozen with a
// 1.25x safety margin. Frozen from the measured maxima
//   c0: 1.4694 at t = 157.0    c1: 0.12144 at t = 3041.0
//   c2: 0.52614 at t = 292.5   c3: 0.66673 at t = 196.6 (k = 1, the worst k)
//   |z_rs(t,0) - Z(t)|  <= c0 * t^{-1/4}
//   |z_rs(t,1) - Z(t)|  <= c1 * t^{-3/4}
//   |zeta_dp(t,T) - zeta| <= c2 * T^{-1/2}
//   |z_pow_afe(t,k) - Z^k(t)| <= c3 * t^{k/4-1} * log^{k-1} t
inline constexpr double kC0 = 1.84;
inline constexpr double kC1 = 0.152;
inline constexpr double kC2 = 0.658;
inline constexpr double kC3 = 0.834;

// Experiment gate bands, frozen after a one-time pilot. These are
// consistency gates at desk scale, not asymptotic claims.
inline constexpr double kKorolevCoef = 18.2;   // |int_{2pi}^T Z| < 18.2 T^{1/4}
// Cubic-formula residual in units of T^{3/4}. The error term oscillates;
// the pilot (mpfr quadrature vs the divisor sum) measured 7.00 / 3.05 / 4.58
// at T = 500 / 1000 / 2000. Frozen at the max with the usual 1.25x margin.
inline constexpr double kCubicCoef = 8.75;
inline constexpr double kInghamCoef = 10.0;    // quartic-moment slack, 10 T log^3 T
inline constexpr double kHallCoef = 5.0;       // 5 (alpha T / log T + sqrt(T) log T)
inline constexpr double kShift3Coef = 5.0;     // shifted-cubic residual <= 5 T^{3/4}
inline constexpr double kGrowthBand = 3.0;     // max/min of R_k over dyadic T
inline constexpr double kSignIdentTol = 1e-6;  // sign-partition identities, relative to H
inline constexpr double kIBand = 3.0;          // I± normalized band
inline constexpr double kKplusLo = 0.35;       // K+(T,T)/T window at T = 1e5
inline constexpr double kKplusHi = 0.65;
inline constexpr double kKsBand = 0.15;        // KS statistic cap at T = 1e6
inline constexpr double kPhaseResidual = 0.25; // phase-point sum relative residual

}  // namespace zhardy::cal
