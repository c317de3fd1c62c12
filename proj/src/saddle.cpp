#include "zhardy/saddle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zhardy {

SaddleResult saddle_point(const SaddleSpec& spec) {
    if (!spec.f || !spec.f1 || !spec.f2)
        throw std::domain_error("saddle_point: f, f', f'' are all required");
    const double a = spec.a, b = spec.b;
    if (!(b > a)) throw std::domain_error("saddle_point: requires a < b");
    if (!(spec.A > 0.0) || !(spec.V > 0.0))
        throw std::domain_error("saddle_point: requires A > 0 and V > 0");
    if (b - a > spec.V * (1.0 + 1e-12))
        throw std::domain_error("saddle_point: interval longer than V");
    for (int i = 0; i <= 32; ++i) {
        const double x = a + (b - a) * i / 32.0;
        if (!(spec.f2(x) > 0.0))
            throw std::domain_error("saddle_point: f'' must be positive on [a, b]");
    }

    const double sqrtA = std::sqrt(spec.A);
    const double fpa = spec.f1(a), fpb = spec.f1(b);
    auto endpoint_term = [sqrtA](double fp) {
        return fp != 0.0 ? std::min(1.0 / std::abs(fp), sqrtA) : sqrtA;
    };
    const double ea = endpoint_term(fpa), eb = endpoint_term(fpb);

    // f'' > 0 makes f' strictly increasing: a saddle exists iff f' spans 0.
    if (fpa > 0.0 || fpb < 0.0) return {{0.0, 0.0}, ea + eb, false, 0.0};

    double c;
    if (fpa == 0.0) {
        c = a;
    } else if (fpb == 0.0) {
        c = b;
    } else {
        double lo = a, hi = b;
        c = 0.5 * (a + b);
        for (int iter = 0; iter < 128; ++iter) {
            const double d1 = spec.f1(c);
            if (d1 > 0.0)
                hi = c;
            else
                lo = c;
            double cn = c - d1 / spec.f2(c);
            if (!(cn > lo && cn < hi)) cn = 0.5 * (lo + hi);
            const bool done = std::abs(cn - c) <= 1e-12 * (1.0 + std::abs(c));
            c = cn;
            if (done) break;
        }
    }

    std::complex<double> main =
        std::polar(1.0 / std::sqrt(spec.f2(c)), 0.25 * std::numbers::pi +
                                                    2.0 * std::numbers::pi * spec.f(c));
    if (std::abs(c - a) < 1e-9 * (b - a) || std::abs(b - c) < 1e-9 * (b - a)) main *= 0.5;
    return {main, spec.A / spec.V + ea + eb, true, c};
}

}  // namespace zhardy
