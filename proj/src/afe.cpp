#include "zhardy/afe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zhardy/calibration.hpp"
#include "zhardy/sum.hpp"

namespace zhardy {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

AfeParams afe_params(double t, int k, const TestFunction& rho) {
    if (k < 1 || k > 3) throw std::domain_error("afe: k must be in {1,2,3}");
    if (!(t >= 10.0)) throw std::domain_error("afe: requires t >= 10");
    if (!(rho.b > 1.0)) throw std::domain_error("afe: requires b > 1");
    return {k, std::pow(t / kTwoPi, 0.5 * k), rho.b};
}

ZValue z_pow_afe(double t, int k, const TestFunction& rho, const DivisorTable& table) {
    const AfeParams p = afe_params(t, k, rho);
    if (table.k != static_cast<unsigned>(k))
        throw std::domain_error("z_pow_afe: divisor table order does not match k");
    const auto needed = static_cast<std::uint64_t>(p.b * p.tau);
    if (table.limit < needed)
        throw ResourceError("z_pow_afe: divisor table covers n <= " +
                                std::to_string(table.limit) + ", need N = " +
                                std::to_string(needed),
                            8 * (needed + 1));

    const double log_tau = 0.5 * k * std::log(t / kTwoPi);
    const double base = -0.5 * k * t - 0.125 * k * std::numbers::pi;
    NeumaierSum sum;
    for (std::uint64_t n = 1; n <= needed; ++n) {
        const double w = rho_eval(static_cast<double>(n) / p.tau, rho);
        if (w == 0.0) continue;
        const double phase = t * (log_tau - std::log(static_cast<double>(n))) + base;
        sum.add(w * static_cast<double>(table.values[n]) /
                std::sqrt(static_cast<double>(n)) * std::cos(phase));
    }
    const double err = cal::kC3 * std::pow(t, 0.25 * k - 1.0) * std::pow(std::log(t), k - 1);
    return {2.0 * sum.value(), err, Method::AFE};
}

}  // namespace zhardy
