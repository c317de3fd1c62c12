#include "zhardy/oscint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zhardy/parallel.hpp"
#include "zhardy/roots.hpp"
#include "zhardy/sum.hpp"
#include "zhardy/zeval.hpp"

namespace zhardy {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double zk_signed(double t, int k) {
    const double z = z_eval(t).value;
    double v = z;
    for (int i = 1; i < k; ++i) v *= z;
    return v;
}

struct AbsOut {
    NeumaierSum value;
    double err = 0.0;
    std::size_t panels = 0, evals = 0;
    bool converged = true;
};

// |Z^k| panel with zero-aware splitting: signed node values feed both the
// absolute-value rule and sign-flip detection; a detected flip puts the kink
// on a panel boundary via a Brent root, after which the rule converges fast.
void abs_panel(const std::function<double(double)>& fsigned, double a, double b, double tol_per_w,
               double width_floor, std::size_t panel_budget, int depth, AbsOut& out) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double v[kGk15N];
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < kGk15N; ++i) {
        v[i] = fsigned(c + h * kGk15Nodes[i]);
        k15 += kGk15Weights[i] * std::abs(v[i]);
        g7 += kG7Weights[i] * std::abs(v[i]);
    }
    out.evals += kGk15N;
    const double value = h * k15;
    const double errest = std::abs(h * (k15 - g7));
    const double share = tol_per_w * (b - a);
    if (errest <= share || (b - a) < width_floor || depth >= 48 || out.panels >= panel_budget) {
        if (errest > share) out.converged = false;
        out.value.add(value);
        out.err += errest;
        ++out.panels;
        return;
    }
    int flip = -1;
    for (int i = 0; i + 1 < kGk15N; ++i)
        if ((v[i] < 0.0 && v[i + 1] > 0.0) || (v[i] > 0.0 && v[i + 1] < 0.0)) {
            flip = i;
            break;
        }
    if (flip >= 0) {
        const double xa = c + h * kGk15Nodes[flip];
        const double xb = c + h * kGk15Nodes[flip + 1];
        const RootResult r = brent_root(fsigned, xa, xb, v[flip], v[flip + 1], 1e-11);
        out.evals += r.evals;
        if (r.root > a + width_floor && r.root < b - width_floor) {
            abs_panel(fsigned, a, r.root, tol_per_w, width_floor, panel_budget, depth + 1, out);
            abs_panel(fsigned, r.root, b, tol_per_w, width_floor, panel_budget, depth + 1, out);
            return;
        }
    }
    abs_panel(fsigned, a, c, tol_per_w, width_floor, panel_budget, depth + 1, out);
    abs_panel(fsigned, c, b, tol_per_w, width_floor, panel_budget, depth + 1, out);
}

// Shared span loop: runs `one(lo, hi, span_tol)` over the smooth spans cut
// out by `cuts` and combines the pieces. An explicit tol is split by width.
template <typename OneSpan>
QuadratureResult over_spans(double a, double b, double tol, const std::vector<double>& cuts,
                            OneSpan one) {
    QuadratureResult res;
    NeumaierSum total;
    const double W = b - a;
    double lo = a;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
        const double hi = i < cuts.size() ? cuts[i] : b;
        const QuadratureResult q = one(lo, hi, tol > 0.0 ? tol * (hi - lo) / W : 0.0);
        total.add(q.value);
        res.err += q.err;
        res.panels += q.panels;
        res.evals += q.evals;
        res.converged = res.converged && q.converged;
        lo = hi;
    }
    res.value = total.value();
    return res;
}

QuadratureResult integrate_abs_odd(double T0, double T1, int k, double tol, int threads) {
    const double W = T1 - T0;
    std::vector<std::pair<double, double>> seeds;
    for (double x = T0; x < T1;) {
        const double w = std::max(osc_cap(x, k), 1e-12 * W);
        if (x + 1.25 * w >= T1) {
            seeds.emplace_back(x, T1);
            break;
        }
        seeds.emplace_back(x, x + w);
        x += w;
    }
    const int nt = resolve_threads(threads);
    auto fsigned = [k](double t) { return zk_signed(t, k); };

    std::vector<double> rated(seeds.size());
    parallel_for(static_cast<std::int64_t>(seeds.size()), nt, [&](std::int64_t i) {
        rated[i] = gk15([&](double t) { return std::abs(fsigned(t)); }, seeds[i].first,
                        seeds[i].second)
                       .value;
    });
    double l1 = 0.0;
    for (double v : rated) l1 += std::abs(v);
    const double tol_eff = tol > 0.0 ? tol : 1e-9 * std::max(1.0, l1);

    std::vector<AbsOut> out(seeds.size());
    parallel_for(static_cast<std::int64_t>(seeds.size()), nt, [&](std::int64_t i) {
        abs_panel(fsigned, seeds[i].first, seeds[i].second, tol_eff / W, 1e-13 * W, 4096, 0,
                  out[i]);
    });

    QuadratureResult res;
    NeumaierSum total;
    res.evals = kGk15N * seeds.size();
    for (auto& s : out) {
        total.add(s.value.value());
        res.err += s.err;
        res.panels += s.panels;
        res.evals += s.evals;
        res.converged = res.converged && s.converged;
    }
    res.value = total.value();
    return res;
}
}  // namespace

double osc_cap(double t, int k) {
    const double lg = std::log(std::max(t, 1e-6) / kTwoPi);
    return std::numbers::pi / (k * std::max(0.5, lg));
}

std::vector<double> z_breakpoints(double a, double b, const std::vector<double>& shifts) {
    std::vector<double> cuts;
    for (const double s : shifts) {
        const double lo = a + s, hi = b + s;  // Z's argument runs over (lo, hi)
        for (const double h : {10.0, 4.0e6})
            if (h > lo && h < hi) cuts.push_back(h - s);
        const double rlo = std::max(lo, 10.0), rhi = std::min(hi, 4.0e6);
        if (rlo < rhi) {
            auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(rlo / kTwoPi)));
            for (;; ++m) {
                const double tm = kTwoPi * static_cast<double>(m * m);
                if (tm >= rhi) break;
                if (tm > rlo) cuts.push_back(tm - s);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

QuadratureResult integrate_z_spans(const std::function<double(double)>& f, double a, double b,
                                   const std::function<double(double)>& cap, double tol,
                                   int threads, const std::vector<double>& shifts) {
    const std::vector<double> cuts = z_breakpoints(a, b, shifts);
    if (cuts.empty()) return integrate_adaptive(f, a, b, cap, tol, threads);
    return over_spans(a, b, tol, cuts, [&](double lo, double hi, double stol) {
        return integrate_adaptive(f, lo, hi, cap, stol, threads);
    });
}

QuadratureResult integrate_zk(double T0, double T1, int k, bool absolute, double tol, int threads,
                              const ZeroTable* zeros) {
    if (!(T0 >= 0.0) || !(T1 > T0))
        throw std::domain_error("integrate_zk: requires 0 <= T0 < T1");
    if (k < 1 || k > 4) throw std::domain_error("integrate_zk: k must be in {1,2,3,4}");
    auto cap = [k](double t) { return osc_cap(t, k); };

    if (!absolute || k % 2 == 0) {
        // |Z|^k = Z^k for even k; abs on the final value costs nothing.
        auto f = [k](double t) { return zk_signed(t, k); };
        QuadratureResult r = integrate_z_spans(f, T0, T1, cap, tol, threads);
        if (absolute) r.value = std::abs(r.value);
        return r;
    }

    if (zeros && zeros->t_lo <= T0 && zeros->t_hi >= T1) {
        // Sign is constant between consecutive zeros: |Z|^k = sum |pieces|.
        std::vector<double> cuts{T0};
        for (const auto& rec : zeros->records)
            if (rec.gamma > T0 && rec.gamma < T1) cuts.push_back(rec.gamma);
        cuts.push_back(T1);
        const int nt = resolve_threads(threads);
        std::vector<QuadratureResult> piece(cuts.size() - 1);
        auto f = [k](double t) { return zk_signed(t, k); };
        const double W = T1 - T0;
        parallel_for(static_cast<std::int64_t>(piece.size()), nt, [&](std::int64_t i) {
            const double ptol = tol > 0.0 ? tol * (cuts[i + 1] - cuts[i]) / W : 0.0;
            piece[i] = integrate_z_spans(f, cuts[i], cuts[i + 1], cap, ptol, 1);
        });
        QuadratureResult res;
        NeumaierSum total;
        for (const auto& p : piece) {
            total.add(std::abs(p.value));
            res.err += p.err;
            res.panels += p.panels;
            res.evals += p.evals;
            res.converged = res.converged && p.converged;
        }
        res.value = total.value();
        return res;
    }

    const std::vector<double> bks = z_breakpoints(T0, T1);
    if (bks.empty()) return integrate_abs_odd(T0, T1, k, tol, threads);
    return over_spans(T0, T1, tol, bks, [&](double lo, double hi, double stol) {
        return integrate_abs_odd(lo, hi, k, stol, threads);
    });
}

}  // namespace zhardy
