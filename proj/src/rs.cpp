#include "zhardy/rs.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zhardy/calibration.hpp"
#include "zhardy/sum.hpp"
#include "zhardy/theta.hpp"

namespace zhardy {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// log n and n^{-1/2} for n <= kTableN, shared read-only after first use.
// Covers m = sqrt(t/2pi) for every t this evaluator accepts.
constexpr std::size_t kTableN = 1024;
struct Tables {
    std::vector<double> ln, rsqrt;
    Tables() : ln(kTableN + 1), rsqrt(kTableN + 1) {
        for (std::size_t n = 1; n <= kTableN; ++n) {
            ln[n] = std::log(static_cast<double>(n));
            rsqrt[n] = 1.0 / std::sqrt(static_cast<double>(n));
        }
    }
};
const Tables& tables() {
    static const Tables t;
    return t;
}
}  // namespace

double rs_psi(double p) {
    const double c = std::cos(kTwoPi * p);
    if (std::abs(c) < 1e-4) {
        // Removable singularity: nearest of p = 1/4 (slope -1), 3/4 (slope +1).
        if (std::abs(p - 0.25) < std::abs(p - 0.75)) return 0.5 - (p - 0.25);
        return 0.5 + (p - 0.75);
    }
    return std::cos(kTwoPi * (p * p - p - 0.0625)) / c;
}

ZValue z_rs(double t, int order) {
    if (!(t >= 10.0) || !std::isfinite(t))
        throw std::domain_error("z_rs: requires t >= 10 (use the oracle below)");
    if (t > 4.0e6)
        throw std::domain_error("z_rs: t above 4e6 (double phase precision; use the oracle)");
    if (order != 0 && order != 1)
        throw std::domain_error("z_rs: order must be 0 or 1");

    const double x = t / kTwoPi;
    const double a = std::sqrt(x);
    const std::size_t m = static_cast<std::size_t>(a);
    const double p = a - static_cast<double>(m);
    const double th = theta(t).value;

    const Tables& tab = tables();
    // m <= 798 for t <= 4e6, always inside the table. Terms are materialized
    // so the cos loop vectorizes, then reduced out-of-line (see sum.hpp).
    double terms[kTableN];
    for (std::size_t n = 1; n <= m; ++n)
        terms[n - 1] = tab.rsqrt[n] * std::cos(th - t * tab.ln[n]);
    double v = 2.0 * neumaier_sum(terms, m);

    if (order == 1) {
        const double corr = std::pow(x, -0.25) * rs_psi(p);
        v += (m % 2 == 1) ? corr : -corr;
        return {v, cal::kC1 * std::pow(t, -0.75), Method::RS1};
    }
    return {v, cal::kC0 * std::pow(t, -0.25), Method::RS0};
}

}  // namespace zhardy
