#include "zhardy/dirichlet.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "zhardy/calibration.hpp"
#include "zhardy/sum.hpp"

namespace zhardy {

ZetaValue zeta_dirichlet(double t, double T) {
    if (!(T >= 10.0)) throw std::domain_error("zeta_dirichlet: requires T >= 10");
    if (!(t >= T && t <= 2.0 * T))
        throw std::domain_error("zeta_dirichlet: requires T <= t <= 2T");

    NeumaierSumC sum;
    const auto N = static_cast<unsigned long>(T);
    for (unsigned long n = 1; n <= N; ++n) {
        const double ph = t * std::log(static_cast<double>(n));
        const double r = 1.0 / std::sqrt(static_cast<double>(n));
        sum.add({r * std::cos(ph), -r * std::sin(ph)});
    }
    // Continuation term T^{1/2-it}/(it - 1/2).
    const std::complex<double> tail =
        std::sqrt(T) * std::exp(std::complex<double>(0.0, -t * std::log(T))) /
        std::complex<double>(-0.5, t);
    return {sum.value() + tail, cal::kC2 / std::sqrt(T), Method::Dirichlet};
}

}  // namespace zhardy
