#pragma once

#include <cstddef>
#include <functional>

namespace zhardy {

struct QuadratureResult {
    double value = 0.0;
    double err = 0.0;  // estimated (embedded lower-order rule), not rigorous
    std::size_t panels = 0;
    std::size_t evals = 0;
    bool converged = true;
};

// 15-point Kronrod value on [a,b] with the embedded 7-point Gauss rule as
// error estimate: errest = |K15 - G7| (conservative for smooth panels).
struct PanelValue {
    double value;
    double errest;
};
PanelValue gk15(const std::function<double(double)>& f, double a, double b);

// The Kronrod abscissae (ascending, on [-1,1]) and both weight sets, exposed
// so fixed-panel passes can share one set of integrand values across several
// accumulators. kG7Weights is zero off the embedded Gauss nodes.
inline constexpr int kGk15N = 15;
extern const double kGk15Nodes[15];
extern const double kGk15Weights[15];
extern const double kG7Weights[15];

// Deterministic two-phase adaptive quadrature of f over [a,b]. Seed panels
// are laid left-to-right with width cap(x) at the panel's left edge x (the
// local oscillation bound). Pass A rates every seed with one rule; pass B
// bisects seeds that miss their width-proportional share of `tol` (absolute;
// tol <= 0 selects 1e-9 * max(1, sum |panel|)). Panelization and reduction
// order depend only on (a, b, cap, tol), never on `threads`, so results are
// bit-identical across thread counts. A seed that exhausts `panel_budget`
// subpanels is kept with its estimate and flags the result non-converged.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const std::function<double(double)>& cap, double tol = 0.0,
                                    int threads = 0, std::size_t panel_budget = 4096);

}  // namespace zhardy
