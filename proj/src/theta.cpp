#include "zhardy/theta.hpp"

#include <cmath>
#include <numbers>
#include <limits>
#include <stdexcept>

namespace zhardy {

namespace {
// Coefficients of the asymptotic tail: c[n] / t^{2n+1}.
// c_n = (1 - 2^{1-2(n+1)}) |B_{2(n+1)}| / (4(n+1)(2(n+1)-1)) expanded:
// 1/48, 7/5760, 31/80640, 127/430080.
constexpr double kTail[4] = {1.0 / 48.0, 7.0 / 5760.0, 31.0 / 80640.0, 127.0 / 430080.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

PhaseValue theta(double t, int order) {
    if (!std::isfinite(t) || t == 0.0)
        throw std::domain_error("theta: t must be finite and nonzero");
    if (order < 0 || order > 2)
        throw std::domain_error("theta: order must be in {0,1,2}");
    const double a = std::abs(t);
    if (a < 2.0 && order > 0)
        throw std::domain_error("theta: asymptotic corrections require |t| >= 2");

    double v = 0.5 * a * std::log(a / kTwoPi) - 0.5 * a - std::numbers::pi / 8.0;
    const double inv = 1.0 / a;
    double p = inv;  // inv^{2n+1}
    for (int n = 0; n < order; ++n) {
        v += kTail[n] * p;
        p *= inv * inv;
    }
    // The omitted tail terms are all positive, so the truncation error is
    // their sum, not just the first: inflate by a geometric envelope of the
    // coefficient growth (ratio <= 1.5/t^2 over the tabulated range). The
    // returned value also carries ~2 ulp of evaluation rounding, which
    // dominates once the series tail is tiny.
    const double a2 = a * a;
    const double tail_sum = a2 > 3.0 ? a2 / (a2 - 1.5) : 4.0;
    const double err = kTail[order] * p * tail_sum +
                       4.0 * std::numeric_limits<double>::epsilon() * std::abs(v);
    if (t < 0.0) v = -v;
    return {v, err};
}

double theta_deriv(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::domain_error("theta_deriv: t must be positive and finite");
    return 0.5 * std::log(t / kTwoPi) - 1.0 / (48.0 * t * t);
}

}  // namespace zhardy
