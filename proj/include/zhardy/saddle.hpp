#pragma once

#include <complex>
#include <functional>

namespace zhardy {

// Inputs for the stationary-phase evaluation of int_a^b e^{2 pi i f(x)} dx.
// A and V are the scale parameters of the hypotheses: f'' ~ 1/A on [a, b]
// and 0 < b - a <= V.
struct SaddleSpec {
    std::function<double(double)> f;   // phase
    std::function<double(double)> f1;  // f'
    std::function<double(double)> f2;  // f'', positive on [a, b]
    double a, b;
    double A, V;
};

struct SaddleResult {
    std::complex<double> main;  // e^{i pi/4} e^{2 pi i f(c)} / sqrt(f''(c))
    double budget;              // sum of the three error-term magnitudes
    bool has_saddle;
    double c;  // stationary point (meaningful when has_saddle)
};

// Locates the stationary point c of f' by safeguarded Newton (bisection
// bracket fallback) to 1e-12, then assembles the main term and the error
// budget A/V + min(1/|f'(a)|, sqrt(A)) + min(1/|f'(b)|, sqrt(A)) with unit
// implied constants. c within 1e-9 (b-a) of an endpoint halves the main
// term. No sign change of f' on [a, b] -> main term 0 and the two endpoint
// error terms only. f'' <= 0 anywhere on a 33-point grid -> domain error.
SaddleResult saddle_point(const SaddleSpec& spec);

}  // namespace zhardy
