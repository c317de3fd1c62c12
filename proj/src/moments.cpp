#include "zhardy/moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "zhardy/parallel.hpp"
#include "zhardy/quadrature.hpp"
#include "zhardy/rng.hpp"
#include "zhardy/sum.hpp"
#include "zhardy/theta.hpp"
#include "zhardy/zeval.hpp"

namespace zhardy {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kExplicitScale = kTwoPi * std::sqrt(2.0 / 3.0);

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0); }
}  // namespace

MomentResult f_moment(double T0, double T1, int k, bool absolute, double tol, int threads,
                      const ZeroTable* zeros) {
    const QuadratureResult q = integrate_zk(T0, T1, k, absolute, tol, threads, zeros);
    return {k, T0, T1, q.value, q.err, absolute, q.converged, q.evals};
}

std::vector<double> f1_prefix(double a, const std::vector<double>& T_list, double tol,
                              int threads) {
    std::vector<double> out(T_list.size());
    const double span = T_list.empty() ? 0.0 : T_list.back() - a;
    NeumaierSum acc;
    double lo = a;
    for (std::size_t i = 0; i < T_list.size(); ++i) {
        const double hi = T_list[i];
        if (!(hi > lo)) throw std::domain_error("f1_prefix: breakpoints must ascend from a");
        const double seg_tol = tol > 0.0 ? tol * (hi - lo) / span : 0.0;
        acc.add(integrate_zk(lo, hi, 1, false, seg_tol, threads).value);
        out[i] = acc.value();
        lo = hi;
    }
    return out;
}

SignPartition sign_partition(double T, double H, int threads) {
    if (!(H > 0.0)) throw std::domain_error("sign_partition: requires H > 0");
    const ZeroTable table = scan_zeros(T, T + H, 0.0, threads);

    std::vector<double> cuts{T};
    for (const auto& r : table.records) cuts.push_back(r.gamma);
    cuts.push_back(T + H);

    SignPartition out;
    out.intervals.resize(cuts.size() - 1);
    std::vector<double> piece_err(out.intervals.size());
    std::vector<char> piece_conv(out.intervals.size(), 1);
    const int nt = resolve_threads(threads);
    parallel_for(static_cast<std::int64_t>(out.intervals.size()), nt, [&](std::int64_t i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        auto f = [](double t) { return z_eval(t).value; };
        const QuadratureResult q = integrate_z_spans(
            f, lo, hi, [](double t) { return osc_cap(t, 1); }, 0.0, 1);
        const int sign = z_eval(0.5 * (lo + hi)).value >= 0.0 ? 1 : -1;
        out.intervals[i] = {lo, hi, sign, q.value};
        piece_err[i] = q.err;
        piece_conv[i] = q.converged ? 1 : 0;
    });

    NeumaierSum kp, km, ip, im, iabs;
    for (std::size_t i = 0; i < out.intervals.size(); ++i) {
        out.err += piece_err[i];
        out.converged = out.converged && piece_conv[i];
    }
    for (const auto& p : out.intervals) {
        if (p.sign > 0) {
            kp.add(p.hi - p.lo);
            ip.add(p.integral);
        } else {
            km.add(p.hi - p.lo);
            im.add(p.integral);
        }
        iabs.add(std::abs(p.integral));
    }
    out.Kplus = kp.value();
    out.Kminus = km.value();
    out.Iplus = ip.value();
    out.Iminus = im.value();
    out.int_abs_z = iabs.value();

    const QuadratureResult zq = integrate_zk(T, T + H, 1, false, 0.0, threads);
    out.int_z = zq.value;
    out.err += zq.err;
    out.converged = out.converged && zq.converged;
    return out;
}

ExplicitFormulaResult cubic_rhs(double T, const DivisorTable& d3) {
    if (!(T > 0.0)) throw std::domain_error("cubic_rhs: requires T > 0");
    if (d3.k != 3) throw std::domain_error("cubic_rhs: needs a k=3 divisor table");
    const auto n_lo = static_cast<std::uint64_t>(std::ceil(std::pow(T / kTwoPi, 1.5)));
    const auto n_hi = static_cast<std::uint64_t>(std::floor(std::pow(T / std::numbers::pi, 1.5)));
    if (n_lo > n_hi) return {0.0, n_lo, n_hi, "none", true};
    if (d3.limit < n_hi)
        throw ResourceError("cubic_rhs: divisor table covers n <= " + std::to_string(d3.limit) +
                                ", need N = " + std::to_string(n_hi),
                            8 * (n_hi + 1));

    NeumaierSum sum;
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        const double cbrt = std::cbrt(static_cast<double>(n));
        const double phase = 3.0 * std::numbers::pi * cbrt * cbrt + 0.125 * std::numbers::pi;
        sum.add(static_cast<double>(d3.values[n]) * std::cos(phase) /
                std::pow(static_cast<double>(n), 1.0 / 6.0));
    }
    return {kExplicitScale * sum.value(), n_lo, n_hi, "none", false};
}

HallResult hall_shifted(double T, double alpha, HallVariant variant, double tol, int threads) {
    if (!(alpha > 0.0)) throw std::domain_error("hall_shifted: requires alpha > 0");
    if (!(T >= 10.0)) throw std::domain_error("hall_shifted: requires T >= 10");
    const double U = alpha / std::log(T);

    auto f = [U](double t) { return z_eval(t).value * z_eval(t + U).value; };
    const QuadratureResult q = integrate_z_spans(
        f, 0.0, T, [](double t) { return osc_cap(t, 2); }, tol, threads, {0.0, U});

    const double C = variant == HallVariant::AsPrinted
                         ? 2.0 * std::numbers::egamma - 1.0 - kTwoPi
                         : 2.0 * std::numbers::egamma - 1.0 - std::log(kTwoPi);
    const double half = 0.5 * alpha;
    const double main = std::sin(half) / half * T * std::log(T) + C * T * std::cos(half);
    const double allowance = alpha * T / std::log(T) + std::sqrt(T) * std::log(T);
    return {q.value, main, q.value - main, allowance, U, q.converged};
}

ExplicitFormulaResult shifted_cubic_rhs(double T, double U, Shift3Range range,
                                        const DivisorTable& d2) {
    if (!(T > 0.0)) throw std::domain_error("shifted_cubic_rhs: requires T > 0");
    if (!(U >= 0.0) || U > std::sqrt(T))
        throw std::domain_error("shifted_cubic_rhs: requires 0 <= U <= sqrt(T)");
    if (d2.k != 2) throw std::domain_error("shifted_cubic_rhs: needs a k=2 divisor table");

    double x_lo = 0.0, x_hi = 0.0;
    switch (range) {
        case Shift3Range::AsPrinted:
            x_lo = std::pow(T / std::numbers::pi, 1.5);
            x_hi = std::pow(T / kTwoPi, 1.5);
            break;
        case Shift3Range::Ascending:
            x_lo = std::pow(T / kTwoPi, 1.5);
            x_hi = std::pow(T / std::numbers::pi, 1.5);
            break;
        case Shift3Range::HalfShifted:
            x_lo = std::pow(T / (2.0 * kTwoPi), 1.5);
            x_hi = std::pow(T / kTwoPi, 1.5);
            break;
    }
    const auto n_lo = static_cast<std::uint64_t>(std::ceil(x_lo));
    const auto n_hi = static_cast<std::uint64_t>(std::floor(x_hi));
    const char* trunc = "K=0 (second-order shift corrections dropped)";
    if (n_lo > n_hi) return {0.0, n_lo, n_hi, trunc, true};
    if (d2.limit < n_hi)
        throw ResourceError("shifted_cubic_rhs: divisor table covers n <= " +
                                std::to_string(d2.limit) + ", need N = " + std::to_string(n_hi),
                            8 * (n_hi + 1));

    NeumaierSum sum;
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        const std::complex<double> h = shift_weight(n, U, d2).value;
        const double cbrt = std::cbrt(static_cast<double>(n));
        const double ln_n = std::log(static_cast<double>(n));
        // n^{-1/6 + iU/3} e^{-i(3 pi n^{2/3} + pi/8)}
        const double mag = std::exp(-ln_n / 6.0);
        const double phase =
            U / 3.0 * ln_n - 3.0 * std::numbers::pi * cbrt * cbrt - 0.125 * std::numbers::pi;
        sum.add((h * std::polar(mag, phase)).real());
    }
    return {kExplicitScale * sum.value(), n_lo, n_hi, trunc, false};
}

MomentResult shifted_cubic_lhs(double T, double U, double tol, int threads) {
    if (!(T > 0.0)) throw std::domain_error("shifted_cubic_lhs: requires T > 0");
    if (!(U >= 0.0)) throw std::domain_error("shifted_cubic_lhs: requires U >= 0");
    auto f = [U](double t) {
        const double z = z_eval(t).value;
        return z * z * z_eval(t + U).value;
    };
    const QuadratureResult q = integrate_z_spans(
        f, 0.5 * T, T, [](double t) { return osc_cap(t, 3); }, tol, threads, {0.0, U});
    return {3, 0.5 * T, T, q.value, q.err, false, q.converged, q.evals};
}

std::vector<GrowthRow> growth_diagnostics(const std::vector<int>& ks,
                                          const std::vector<double>& T_list, int threads) {
    if (ks.empty()) throw std::domain_error("growth_diagnostics: needs at least one k");
    for (int k : ks)
        if (k < 1 || k > 4) throw std::domain_error("growth_diagnostics: k must be in {1,2,3,4}");
    const int nt = resolve_threads(threads);

    std::vector<GrowthRow> rows;
    for (const double T : T_list) {
        if (!(T >= 10.0)) throw std::domain_error("growth_diagnostics: requires T >= 10");
        // Fixed panels at a third of the local mean zero gap; boundaries
        // depend only on T.
        std::vector<double> edges{T};
        while (edges.back() < 2.0 * T) {
            const double w = kTwoPi / std::log(edges.back() / kTwoPi) / 3.0;
            edges.push_back(std::min(edges.back() + w, 2.0 * T));
        }
        const std::size_t npanels = edges.size() - 1;
        constexpr std::size_t kChunk = 1024;
        const std::size_t nchunks = (npanels + kChunk - 1) / kChunk;
        std::vector<std::array<double, 4>> chunk_sums(nchunks);
        parallel_for(static_cast<std::int64_t>(nchunks), nt, [&](std::int64_t ci) {
            NeumaierSum acc[4];
            const std::size_t p_lo = ci * kChunk;
            const std::size_t p_hi = std::min(p_lo + kChunk, npanels);
            for (std::size_t p = p_lo; p < p_hi; ++p) {
                const double c = 0.5 * (edges[p] + edges[p + 1]);
                const double h = 0.5 * (edges[p + 1] - edges[p]);
                double rule[4] = {0.0, 0.0, 0.0, 0.0};
                for (int i = 0; i < kGk15N; ++i) {
                    const double az = std::abs(z_eval(c + h * kGk15Nodes[i]).value);
                    double pw = az;
                    for (int k = 1; k <= 4; ++k) {
                        rule[k - 1] += kGk15Weights[i] * pw;
                        pw *= az;
                    }
                }
                for (int k = 0; k < 4; ++k) acc[k].add(h * rule[k]);
            }
            for (int k = 0; k < 4; ++k) chunk_sums[ci][k] = acc[k].value();
        });
        NeumaierSum total[4];
        for (const auto& cs : chunk_sums)
            for (int k = 0; k < 4; ++k) total[k].add(cs[k]);
        for (const int k : ks) {
            const double integral = total[k - 1].value();
            rows.push_back({k, T, integral,
                            integral / (T * std::pow(std::log(T), 0.25 * k * k)),
                            npanels * kGk15N});
        }
    }
    return rows;
}

std::vector<GrowthRow> growth_diagnostics(int k, const std::vector<double>& T_list, int threads) {
    return growth_diagnostics(std::vector<int>{k}, T_list, threads);
}

CltSample clt_sample(double T, std::uint64_t m, std::uint64_t seed, int threads) {
    if (!(T >= 1e3)) throw std::domain_error("clt_sample: requires T >= 1e3");
    if (m < 1000) throw std::domain_error("clt_sample: requires m >= 1000");
    constexpr double kZeroGuard = 1e-8;

    Rng rng(seed);
    std::vector<double> ts(m);
    for (auto& t : ts) t = rng.uniform(T, 2.0 * T);

    std::vector<double> zs(m);
    const int nt = resolve_threads(threads);
    parallel_for(static_cast<std::int64_t>(m), nt,
                 [&](std::int64_t i) { zs[i] = std::abs(z_eval(ts[i]).value); });

    // Sequential redraw pass keeps the RNG stream identical for any thread
    // count (rejections are measure-zero rare).
    CltSample out{T, m, seed, {}, 0.0, 0};
    const double norm = std::sqrt(0.5 * std::log(std::log(T)));
    out.values.resize(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        double az = zs[i];
        while (az < kZeroGuard) {
            ++out.rejections;
            az = std::abs(z_eval(rng.uniform(T, 2.0 * T)).value);
        }
        out.values[i] = std::log(az) / norm;
    }

    std::vector<double> sorted = out.values;
    std::sort(sorted.begin(), sorted.end());
    double d = 0.0;
    for (std::uint64_t i = 0; i < m; ++i) {
        const double cdf = std_normal_cdf(sorted[i]);
        d = std::max(d, std::max(cdf - static_cast<double>(i) / m,
                                 static_cast<double>(i + 1) / m - cdf));
    }
    out.ks_stat = d;
    return out;
}

PhaseSumResult phase_point_sum(double T, double phi) {
    if (!(phi >= 0.0 && phi < std::numbers::pi))
        throw std::domain_error("phase_point_sum: requires phi in [0, pi)");
    if (!(T >= 20.0 && T <= 4.0e6))
        throw std::domain_error("phase_point_sum: requires 20 <= T <= 4e6");

    const double th10 = theta(10.0).value;
    const double thT = theta(T).value;
    const auto j_lo = static_cast<long long>(std::ceil((th10 + phi) / std::numbers::pi));
    const auto j_hi = static_cast<long long>(std::floor((thT + phi) / std::numbers::pi));

    NeumaierSumC emp;
    double realness = 0.0;
    std::uint64_t points = 0;
    double t = 10.0;
    for (long long j = j_lo; j <= j_hi; ++j) {
        const double y = -phi + std::numbers::pi * static_cast<double>(j);
        // Advance past the previous point, then Newton on theta(t) = y.
        // The residual must reach the rounding floor of theta itself (a few
        // ulp of y), or the summands pick up a spurious imaginary part.
        double guess = t + (y - theta(t).value) / theta_deriv(t);
        double best_t = guess, best_r = std::numeric_limits<double>::infinity();
        for (int it = 0; it < 30; ++it) {
            const double r = theta(guess).value - y;
            if (std::abs(r) < best_r) {
                best_r = std::abs(r);
                best_t = guess;
            }
            if (std::abs(r) <= std::numeric_limits<double>::epsilon() * std::abs(y) ||
                std::abs(r) < 1e-13)
                break;
            double next = guess - r / theta_deriv(guess);
            if (next < 10.0) next = 10.0;
            if (next == guess) break;  // step fell below one ulp of t
            guess = next;
        }
        t = best_t;
        const double z = z_eval(t).value;
        const std::complex<double> summand =
            std::polar(1.0, -theta(t).value) * z;
        emp.add(summand);
        realness = std::max(realness,
                            std::abs(summand.imag()) / std::max(1.0, std::abs(summand)));
        ++points;
    }

    const std::complex<double> eiphi = std::polar(1.0, phi);
    const double scale = T / kTwoPi * std::log(T / (kTwoPi * std::numbers::e));
    const std::complex<double> main = 2.0 * eiphi * std::cos(phi) * scale;
    const double denom = std::abs(main) > 0.0 ? std::abs(main)
                                              : T / kTwoPi * std::log(T / kTwoPi);
    return {emp.value(), main, points, std::abs(emp.value() - main) / denom, realness};
}

}  // namespace zhardy
