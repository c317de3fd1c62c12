#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace zhardy {

struct RootResult {
    double root = 0.0;
    double bracket = 0.0;  // final bracket half-width
    int evals = 0;
};

// Brent's method on a sign-changing bracket [a, b]. fa, fb are f at the ends
// (so callers can reuse evaluations they already have). Converges to
// |bracket| <= xtol. No derivative needed; superlinear on smooth f.
inline RootResult brent_root(const std::function<double(double)>& f, double a, double b,
                             double fa, double fb, double xtol, int max_iter = 128) {
    if (!((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)))
        throw std::domain_error("brent_root: endpoints do not bracket a sign change");
    double c = a, fc = fa;
    double d = b - a, e = d;
    int evals = 0;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1.1102230246251565e-16 * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return {b, std::abs(xm) + tol1, evals};
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        ++evals;
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return {b, std::abs(c - b), evals};
}

}  // namespace zhardy
