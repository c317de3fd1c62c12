#include "zhardy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zhardy/parallel.hpp"
#include "zhardy/sum.hpp"

namespace zhardy {

// Kronrod-15 / Gauss-7 pair (QUADPACK dqk15 constants).
const double kGk15Nodes[15] = {
    -0.9914553711208126, -0.9491079123427585, -0.8648644233597691, -0.7415311855993945,
    -0.5860872354676911, -0.4058451513773972, -0.2077849550078985, 0.0,
    0.2077849550078985,  0.4058451513773972,  0.5860872354676911,  0.7415311855993945,
    0.8648644233597691,  0.9491079123427585,  0.9914553711208126};
const double kGk15Weights[15] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278,
    0.2044329400752989,  0.1903505780647854,  0.1690047266392679, 0.1406532597155259,
    0.1047900103222502,  0.06309209262997855, 0.02293532201052922};
const double kG7Weights[15] = {
    0.0, 0.1294849661688697, 0.0, 0.2797053914892767, 0.0, 0.3818300505051189, 0.0,
    0.4179591836734694,
    0.0, 0.3818300505051189, 0.0, 0.2797053914892767, 0.0, 0.1294849661688697, 0.0};

PanelValue gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < kGk15N; ++i) {
        const double v = f(c + h * kGk15Nodes[i]);
        k15 += kGk15Weights[i] * v;
        g7 += kG7Weights[i] * v;
    }
    return {h * k15, std::abs(h * (k15 - g7))};
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const std::function<double(double)>& cap, double tol,
                                    int threads, std::size_t panel_budget) {
    if (!(a < b)) throw std::domain_error("integrate_adaptive: requires a < b");
    const double W = b - a;
    const double wmin = 1e-12 * W;

    std::vector<std::pair<double, double>> seeds;
    for (double x = a; x < b;) {
        double w = cap(x);
        if (!(w > 0.0)) throw std::domain_error("integrate_adaptive: cap must be positive");
        w = std::max(w, wmin);
        if (x + 1.25 * w >= b) {
            seeds.emplace_back(x, b);
            break;
        }
        seeds.emplace_back(x, x + w);
        x += w;
    }
    const int nt = resolve_threads(threads);

    // Pass A: one rule per seed, to rate panels and set the automatic tol.
    std::vector<PanelValue> rated(seeds.size());
    parallel_for(static_cast<std::int64_t>(seeds.size()), nt, [&](std::int64_t i) {
        rated[i] = gk15(f, seeds[i].first, seeds[i].second);
    });
    double l1 = 0.0;
    for (const auto& r : rated) l1 += std::abs(r.value);
    const double tol_eff = tol > 0.0 ? tol : 1e-9 * std::max(1.0, l1);

    // Pass B: failing seeds are re-done with local width-proportional
    // bisection (LIFO, left child first, so accumulation is left-to-right).
    struct SeedOut {
        double value, err;
        std::size_t panels, evals;
        bool converged;
    };
    std::vector<SeedOut> out(seeds.size());
    parallel_for(static_cast<std::int64_t>(seeds.size()), nt, [&](std::int64_t i) {
        const auto [lo, hi] = seeds[i];
        const double share = tol_eff * (hi - lo) / W;
        if (rated[i].errest <= share) {
            out[i] = {rated[i].value, rated[i].errest, 1, 0, true};
            return;
        }
        std::vector<std::pair<double, double>> stack{{lo, hi}};
        NeumaierSum val;
        double errsum = 0.0;
        std::size_t panels = 0, evals = 0;
        bool converged = true;
        while (!stack.empty()) {
            const auto [plo, phi] = stack.back();
            stack.pop_back();
            const PanelValue r = gk15(f, plo, phi);
            evals += kGk15N;
            const double psh = tol_eff * (phi - plo) / W;
            const bool floor_hit = (phi - plo) < 1e-13 * W;
            if (r.errest <= psh || floor_hit || panels + stack.size() + 1 >= panel_budget) {
                if (r.errest > psh) converged = false;
                val.add(r.value);
                errsum += r.errest;
                ++panels;
            } else {
                const double mid = 0.5 * (plo + phi);
                stack.emplace_back(mid, phi);
                stack.emplace_back(plo, mid);
            }
        }
        out[i] = {val.value(), errsum, panels, evals, converged};
    });

    QuadratureResult res;
    NeumaierSum total;
    res.evals = kGk15N * seeds.size();
    for (const auto& s : out) {
        total.add(s.value);
        res.err += s.err;
        res.panels += s.panels;
        res.evals += s.evals;
        res.converged = res.converged && s.converged;
    }
    res.value = total.value();
    return res;
}

}  // namespace zhardy
