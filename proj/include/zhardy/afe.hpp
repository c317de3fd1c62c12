#pragma once

#include "zhardy/divisor.hpp"
#include "zhardy/types.hpp"

namespace zhardy {

// Parameters of the smooth approximate functional equation for Z^k. tau is a
// function of t and must be recomputed per evaluation, never cached across t.
struct AfeParams {
    int k;       // power: approximates Z^k
    double tau;  // (t/2pi)^{k/2}
    double b;    // smoothing edge carried by rho
};

AfeParams afe_params(double t, int k, const TestFunction& rho = {});

// Z^k(t) ~ 2 sum_{n <= 2 tau} rho(n/tau) d_k(n) n^{-1/2}
//            cos(t log(tau/n) - k t/2 - k pi/8),
// err = c3 * t^{k/4-1} * log^{k-1} t. The divisor table must cover every n
// with rho(n/tau) > 0, i.e. n < b*tau; otherwise a resource error names the
// required length.
ZValue z_pow_afe(double t, int k, const TestFunction& rho, const DivisorTable& table);

}  // namespace zhardy
