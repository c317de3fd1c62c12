#pragma once

#include <functional>
#include <vector>

#include "zhardy/quadrature.hpp"
#include "zhardy/zeros.hpp"

namespace zhardy {

// Half the local oscillation period of Z^k near height t: Z oscillates like
// cos(theta(t)), so the period is ~2pi/theta'(t) and Z^k shrinks it k-fold.
// Clamped below 2pi so the bound stays finite through t < 2pi.
double osc_cap(double t, int k);

// The composite evaluator behind these integrals is smooth only piecewise:
// the method handoffs at t = 10 and t = 4e6 and the Riemann-Siegel
// term-count steps at t = 2 pi m^2 each carry a jump of the size of the
// evaluator's error bound. A panel straddling one stalls refinement (the
// rule error and the panel's tolerance share both shrink linearly with
// width), so quadrature must keep these points on panel boundaries.
// Returns the breakpoints of t -> Z(t + shift) for every given shift,
// strictly inside (a, b), sorted and deduplicated.
std::vector<double> z_breakpoints(double a, double b, const std::vector<double>& shifts = {0.0});

// Adaptive quadrature of f over [a, b], assembled from the smooth spans
// between z_breakpoints. An explicit tol is split across spans by width;
// tol <= 0 keeps the automatic per-span tolerance. Pass one shift per
// evaluator offset appearing in f (e.g. {0, U} for Z(t) Z(t + U)).
QuadratureResult integrate_z_spans(const std::function<double(double)>& f, double a, double b,
                                   const std::function<double(double)>& cap, double tol = 0.0,
                                   int threads = 0, const std::vector<double>& shifts = {0.0});

// Adaptive quadrature of Z^k (absolute selects |Z|^k) over [T0, T1] with
// panel widths tied to osc_cap. For odd k with absolute set, the integrand
// has |Z'|-kinks at every zero: when `zeros` covers [T0, T1] the integral is
// assembled as sum of |signed piece| between consecutive zeros; otherwise
// panels are split at sign changes detected among their own nodes (Brent on
// the bracketing node pair), which keeps every kink on a panel boundary.
// tol <= 0 selects 1e-9 * max(1, L1). Results are thread-count independent.
QuadratureResult integrate_zk(double T0, double T1, int k, bool absolute, double tol = 0.0,
                              int threads = 0, const ZeroTable* zeros = nullptr);

}  // namespace zhardy
