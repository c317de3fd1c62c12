// Acceptance gate. Runs fourteen end-to-end checks spanning every module and
// prints one [PASS]/[FAIL] line per criterion; any failure exits 1. Heavier
// than the unit suite (minutes, not seconds): each check exercises a full
// experiment at production scale against an independent reference.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

#include "zhardy/calibration.hpp"
#include "zhardy/divisor.hpp"
#include "zhardy/moments.hpp"
#include "zhardy/oracle.hpp"
#include "zhardy/oscint.hpp"
#include "zhardy/parallel.hpp"
#include "zhardy/quadrature.hpp"
#include "zhardy/rng.hpp"
#include "zhardy/rs.hpp"
#include "zhardy/saddle.hpp"
#include "zhardy/zeros.hpp"

using namespace zhardy;
using namespace zhardy::cal;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

const char* g_crit = "";        // label of the criterion being run
fs::path g_exe_dir;             // directory holding this binary (and the CLI)

// Always-on gate; prints a single [FAIL] line with the violation and bails
// out of the criterion.
#define REQUIRE(cond, ...)                                  \
    do {                                                    \
        if (!(cond)) {                                      \
            std::printf("[FAIL] %s: ", g_crit);             \
            std::printf(__VA_ARGS__);                       \
            std::printf("  [%s:%d]\n", __FILE__, __LINE__); \
            return false;                                   \
        }                                                   \
    } while (0)

void notef(std::string& note, const char* fmt, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    note += buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Criteria 1-2 share one sample: 10^4 log-uniform t in [1e2, 1e6], seed 1,
// each evaluated by both Riemann-Siegel orders and the 20-digit oracle.
// ---------------------------------------------------------------------------

struct Seed1Sample {
    std::vector<double> t, rs0, rs1, err1, ref;
    double build_seconds = 0.0;
};

const Seed1Sample& seed1_sample() {
    static const Seed1Sample s = [] {
        const auto t0 = std::chrono::steady_clock::now();
        Seed1Sample out;
        const std::size_t n = 10000;
        out.t.resize(n);
        Rng rng(1);
        for (double& t : out.t) t = rng.log_uniform(1e2, 1e6);
        out.rs0.resize(n);
        out.rs1.resize(n);
        out.err1.resize(n);
        out.ref.resize(n);
        parallel_for(static_cast<std::int64_t>(n), 0, [&](std::int64_t i) {
            const auto u = static_cast<std::size_t>(i);
            const double t = out.t[u];
            out.rs0[u] = z_rs(t, 0).value;
            const ZValue r1 = z_rs(t, 1);
            out.rs1[u] = r1.value;
            out.err1[u] = r1.err;
            out.ref[u] = z_oracle(t, 20).value;
        });
        out.build_seconds = seconds_since(t0);
        return out;
    }();
    return s;
}

// 1. Every order-1 evaluation agrees with the 20-digit oracle within its own
//    stated error bound; the whole cross-check finishes inside ten minutes.
bool crit01(std::string& note) {
    const Seed1Sample& s = seed1_sample();
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t violations = 0;
    double worst_ratio = 0.0, worst_t = 0.0;
    for (std::size_t i = 0; i < s.t.size(); ++i) {
        const double d = std::abs(s.rs1[i] - s.ref[i]);
        if (d > s.err1[i]) ++violations;
        if (d / s.err1[i] > worst_ratio) {
            worst_ratio = d / s.err1[i];
            worst_t = s.t[i];
        }
    }
    const double wall = s.build_seconds + seconds_since(t0);
    REQUIRE(violations == 0, "%zu of %zu points exceed the stated bound (worst ratio %.3f at t=%.6g)",
            violations, s.t.size(), worst_ratio, worst_t);
    REQUIRE(wall < 600.0, "cross-check took %.1fs (budget 600s)", wall);
    notef(note, "10^4 points, worst |dZ|/bound = %.3f, %.0fs", worst_ratio, wall);
    return true;
}

// 2. Order-0 error scaling: max |dZ| t^{1/4} stays below the frozen c0.
bool crit02(std::string& note) {
    const Seed1Sample& s = seed1_sample();
    double worst = 0.0, worst_t = 0.0;
    for (std::size_t i = 0; i < s.t.size(); ++i) {
        const double scaled = std::abs(s.rs0[i] - s.ref[i]) * std::pow(s.t[i], 0.25);
        if (scaled > worst) {
            worst = scaled;
            worst_t = s.t[i];
        }
    }
    REQUIRE(worst <= kC0, "max |dZ| t^{1/4} = %.6f at t=%.6g exceeds frozen c0 = %.3f", worst,
            worst_t, kC0);
    notef(note, "max |dZ| t^{1/4} = %.4f <= frozen %.2f", worst, kC0);
    return true;
}

// 3. Zero census on [10, 1e4]: counts track the main-term count within
//    2 log T, and every oracle-refined ordinate has |Z| < 1e-6.
bool crit03(std::string& note) {
    const ZeroTable tab = scan_zeros(10.0, 1e4, 0.0, 0, true);
    REQUIRE(tab.unreconciled == 0, "%llu scan windows failed count reconciliation",
            static_cast<unsigned long long>(tab.unreconciled));
    for (const double T : {1e3, 5e3, 1e4}) {
        const auto it = std::upper_bound(
            tab.records.begin(), tab.records.end(), T,
            [](double v, const ZeroRecord& r) { return v < r.gamma; });
        const double count = static_cast<double>(it - tab.records.begin());
        const double slack = 2.0 * std::log(T);
        REQUIRE(std::abs(count - n_rvm(T)) <= slack,
                "census at T=%.0f: %.0f zeros vs main term %.2f (slack %.2f)", T, count, n_rvm(T),
                slack);
    }
    std::vector<double> resid(tab.records.size());
    parallel_for(static_cast<std::int64_t>(tab.records.size()), 0, [&](std::int64_t i) {
        resid[static_cast<std::size_t>(i)] =
            std::abs(z_oracle(tab.records[static_cast<std::size_t>(i)].gamma, 12).value);
    });
    const double worst = *std::max_element(resid.begin(), resid.end());
    REQUIRE(worst < 1e-6, "worst refined-zero residual |Z| = %.3g (gate 1e-6)", worst);
    notef(note, "%zu zeros, worst |Z(gamma)| = %.1e", tab.records.size(), worst);
    return true;
}

// 4. First-moment bound: |int_{2pi}^T Z| < 18.2 T^{1/4} on a 50-point
//    log grid up to 1e6; a sign change of the prefix is reported (its
//    absence is inconclusive, not a failure).
bool crit04(std::string& note) {
    std::vector<double> Ts(50);
    for (int j = 0; j < 50; ++j) Ts[j] = kTwoPi * std::pow(1e6 / kTwoPi, (j + 1) / 50.0);
    Ts.back() = 1e6;
    const std::vector<double> F = f1_prefix(kTwoPi, Ts);
    double worst_ratio = 0.0, worst_T = 0.0;
    int sign_changes = 0;
    for (std::size_t j = 0; j < Ts.size(); ++j) {
        const double bound = kKorolevCoef * std::pow(Ts[j], 0.25);
        if (std::abs(F[j]) / bound > worst_ratio) {
            worst_ratio = std::abs(F[j]) / bound;
            worst_T = Ts[j];
        }
        REQUIRE(std::abs(F[j]) < bound, "|F_1(%.4g)| = %.4f exceeds %.1f T^{1/4} = %.4f", Ts[j],
                std::abs(F[j]), kKorolevCoef, bound);
        if (j > 0 && F[j - 1] * F[j] < 0.0) ++sign_changes;
    }
    notef(note, "max |F_1|/bound = %.3f at T=%.3g; ", worst_ratio, worst_T);
    if (sign_changes > 0)
        notef(note, "%d sign changes", sign_changes);
    else
        notef(note, "no sign change on grid (inconclusive)");
    return true;
}

// 5. Cubic moment vs the divisor-sum explicit formula, residual <= 5 T^{3/4}.
bool crit05(std::string& note) {
    const DivisorTable d3 = sieve_dk(3, 16200);
    for (const double T : {500.0, 1000.0, 2000.0}) {
        const auto t0 = std::chrono::steady_clock::now();
        const MomentResult lhs = f_moment(T, 2.0 * T, 3, false);
        const ExplicitFormulaResult rhs = cubic_rhs(T, d3);
        const double wall = seconds_since(t0);
        REQUIRE(lhs.converged, "quadrature did not converge at T=%.0f", T);
        REQUIRE(!rhs.empty, "explicit-formula window empty at T=%.0f", T);
        const double resid = std::abs(lhs.value - rhs.value);
        const double gate = kCubicCoef * std::pow(T, 0.75);
        REQUIRE(resid <= gate, "T=%.0f: |lhs - rhs| = %.3f exceeds %.3f", T, resid, gate);
        REQUIRE(wall < 300.0, "T=%.0f took %.1fs (budget 300s)", T, wall);
        notef(note, "T=%.0f resid/gate=%.2f ", T, resid / gate);
    }
    return true;
}

// 6. Quartic moment main term: |F_4(0,T) - T log^4 T / (2 pi^2)| <= 10 T log^3 T.
bool crit06(std::string& note) {
    for (const double T : {1e4, 1e5}) {
        const MomentResult q = f_moment(0.0, T, 4, false);
        REQUIRE(q.converged, "quadrature did not converge at T=%.0f", T);
        const double lg = std::log(T);
        const double main = T * lg * lg * lg * lg / (2.0 * kPi * kPi);
        const double gate = kInghamCoef * T * lg * lg * lg;
        const double resid = std::abs(q.value - main);
        REQUIRE(resid <= gate, "T=%.0f: |F_4 - main| = %.4g exceeds %.4g", T, resid, gate);
        notef(note, "T=%.0f resid/gate=%.2f ", T, resid / gate);
    }
    return true;
}

// 7. Shifted second moment: of the two printed readings of the constant term,
//    the better one lands within 5 (alpha T / log T + sqrt(T) log T). The
//    per-variant report is part of the output.
bool crit07(std::string& note) {
    for (const double alpha : {0.5, 1.0}) {
        const HallResult printed = hall_shifted(1e4, alpha, HallVariant::AsPrinted);
        const HallResult logv = hall_shifted(1e4, alpha, HallVariant::LogVariant);
        REQUIRE(printed.converged && logv.converged, "quadrature did not converge at alpha=%.1f",
                alpha);
        const bool log_wins = std::abs(logv.residual) < std::abs(printed.residual);
        std::printf(
            "       shift2 report: alpha=%.2f lhs=%.4f resid[2pi]=%.4f resid[log2pi]=%.4f "
            "winner=%s\n",
            alpha, printed.lhs, printed.residual, logv.residual, log_wins ? "log2pi" : "2pi");
        const double best = std::min(std::abs(printed.residual), std::abs(logv.residual));
        const double gate = kHallCoef * printed.allowance;
        REQUIRE(best <= gate, "alpha=%.1f: best residual %.4f exceeds %.4f", alpha, best, gate);
        notef(note, "alpha=%.1f best/gate=%.2f ", alpha, best / gate);
    }
    return true;
}

// 8. Shifted cubic moment: among the two non-empty summation windows (the
//    window as printed descends and is empty) at least one matches direct
//    quadrature of int_{T/2}^T Z^2(t) Z(t+U) dt within 5 T^{3/4}, and the
//    same window wins every (T, U) cell.
bool crit08(std::string& note) {
    const DivisorTable d2 = sieve_dk(2, 6200);
    std::string first_winner;
    for (const double T : {500.0, 1000.0}) {
        for (const double U : {1.0, 2.0}) {
            const MomentResult lhs = shifted_cubic_lhs(T, U);
            REQUIRE(lhs.converged, "quadrature did not converge at T=%.0f U=%.0f", T, U);
            const ExplicitFormulaResult printed =
                shifted_cubic_rhs(T, U, Shift3Range::AsPrinted, d2);
            REQUIRE(printed.empty, "window as printed unexpectedly non-empty at T=%.0f", T);
            const double ra =
                std::abs(lhs.value - shifted_cubic_rhs(T, U, Shift3Range::Ascending, d2).value);
            const double rh =
                std::abs(lhs.value - shifted_cubic_rhs(T, U, Shift3Range::HalfShifted, d2).value);
            const char* winner = rh < ra ? "half-shifted" : "ascending";
            const double best = std::min(ra, rh);
            const double gate = kShift3Coef * std::pow(T, 0.75);
            REQUIRE(best <= gate, "T=%.0f U=%.0f: best residual %.3f exceeds %.3f", T, U, best,
                    gate);
            if (first_winner.empty()) first_winner = winner;
            REQUIRE(first_winner == winner, "winning window flips at T=%.0f U=%.0f (%s vs %s)", T,
                    U, winner, first_winner.c_str());
        }
    }
    notef(note, "stable winner: %s", first_winner.c_str());
    return true;
}

// 9. Moment growth bands: R_k(T) = int_T^{2T} |Z|^k / (T log^{k^2/4} T) stays
//    within a factor-3 band over dyadic T in [1e3, 1e6] for k = 1, 2, 3.
bool crit09(std::string& note) {
    std::vector<double> Ts;
    for (double T = 1e3; T <= 1e6 * (1.0 + 1e-12); T *= 2.0) Ts.push_back(T);
    const std::vector<GrowthRow> rows = growth_diagnostics({1, 2, 3}, Ts);
    std::map<int, std::pair<double, double>> band;  // k -> (min, max)
    for (const GrowthRow& r : rows) {
        REQUIRE(std::isfinite(r.ratio) && r.ratio > 0.0, "R_%d(%.0f) = %.4g not positive", r.k,
                r.T, r.ratio);
        auto [it, fresh] = band.try_emplace(r.k, r.ratio, r.ratio);
        if (!fresh) {
            it->second.first = std::min(it->second.first, r.ratio);
            it->second.second = std::max(it->second.second, r.ratio);
        }
    }
    for (const auto& [k, mm] : band) {
        const double spread = mm.second / mm.first;
        REQUIRE(spread < kGrowthBand, "k=%d: R_k spread %.3f over %zu dyadic T (gate %.1f)", k,
                spread, Ts.size(), kGrowthBand);
        notef(note, "k=%d spread=%.2f ", k, spread);
    }
    return true;
}

// 10. Sign distribution: measure/integral identities to 1e-6 H, normalized
//     I+- within a factor-3 band over dyadic T in [1e3, 1e5], and the
//     positive-sign fraction K+(T,T)/T inside [0.35, 0.65] at T = 1e5.
bool crit10(std::string& note) {
    auto identities = [](const SignPartition& sp, double H) -> const char* {
        if (std::abs(sp.Kplus + sp.Kminus - H) > kSignIdentTol * H) return "K+ + K- = H";
        if (std::abs(sp.Iplus + sp.Iminus - sp.int_z) > kSignIdentTol * H)
            return "I+ + I- = int Z";
        if (std::abs(sp.Iplus - sp.Iminus - sp.int_abs_z) > kSignIdentTol * H)
            return "I+ - I- = int |Z|";
        return nullptr;
    };
    double plus_min = 0.0, plus_max = 0.0, minus_min = 0.0, minus_max = 0.0;
    bool first = true;
    for (double T = 1e3; T <= 1e5 * (1.0 + 1e-12); T *= 2.0) {
        const SignPartition sp = sign_partition(T, T);
        REQUIRE(sp.converged, "piece quadrature did not converge at T=%.0f", T);
        if (const char* broken = identities(sp, T))
            REQUIRE(false, "identity %s fails at T=%.0f", broken, T);
        const double scale = T * std::pow(std::log(T), 0.25);
        const double rp = sp.Iplus / scale, rm = -sp.Iminus / scale;
        REQUIRE(rp > 0.0 && rm > 0.0, "normalized I+- not positive at T=%.0f", T);
        if (first) {
            plus_min = plus_max = rp;
            minus_min = minus_max = rm;
            first = false;
        } else {
            plus_min = std::min(plus_min, rp);
            plus_max = std::max(plus_max, rp);
            minus_min = std::min(minus_min, rm);
            minus_max = std::max(minus_max, rm);
        }
    }
    REQUIRE(plus_max / plus_min < kIBand, "I+ band %.3f exceeds %.1f", plus_max / plus_min,
            kIBand);
    REQUIRE(minus_max / minus_min < kIBand, "I- band %.3f exceeds %.1f", minus_max / minus_min,
            kIBand);
    const SignPartition top = sign_partition(1e5, 1e5);
    if (const char* broken = identities(top, 1e5))
        REQUIRE(false, "identity %s fails at T=1e5", broken);
    const double share = top.Kplus / 1e5;
    REQUIRE(share >= kKplusLo && share <= kKplusHi, "K+/H = %.4f outside [%.2f, %.2f]", share,
            kKplusLo, kKplusHi);
    notef(note, "I+ band %.2f, I- band %.2f, K+/H = %.3f", plus_max / plus_min,
          minus_max / minus_min, share);
    return true;
}

// 11. Central limit behaviour of log |Z|: KS distance to the standard normal
//     at most 0.15 at T = 1e6, and smaller than at T = 1e4.
bool crit11(std::string& note) {
    const CltSample hi = clt_sample(1e6, 10000, 1);
    const CltSample lo = clt_sample(1e4, 10000, 1);
    REQUIRE(hi.ks_stat <= kKsBand, "KS = %.4f at T=1e6 exceeds %.2f", hi.ks_stat, kKsBand);
    REQUIRE(hi.ks_stat < lo.ks_stat, "KS does not decrease: %.4f at T=1e4 vs %.4f at T=1e6",
            lo.ks_stat, hi.ks_stat);
    notef(note, "KS 1e4 -> 1e6: %.4f -> %.4f", lo.ks_stat, hi.ks_stat);
    return true;
}

// 12. Stationary-phase evaluator honesty: the Fresnel case and a 50-case
//     randomized family all land within the returned error budget (>= 95%).
bool crit12(std::string& note) {
    auto direct = [](const std::function<double(double)>& f, double a,
                     double b) -> std::complex<double> {
        auto cap = [](double) { return 0.05; };
        const QuadratureResult re =
            integrate_adaptive([&](double x) { return std::cos(kTwoPi * f(x)); }, a, b, cap, 1e-10);
        const QuadratureResult im =
            integrate_adaptive([&](double x) { return std::sin(kTwoPi * f(x)); }, a, b, cap, 1e-10);
        return {re.value, im.value};
    };

    const SaddleSpec fresnel{[](double x) { return x * x; }, [](double x) { return 2.0 * x; },
                             [](double) { return 2.0; },     0.0,
                             1.0,                            0.5,
                             1.0};
    const SaddleResult fr = saddle_point(fresnel);
    REQUIRE(fr.has_saddle, "Fresnel case lost its stationary point");
    const std::complex<double> fd = direct(fresnel.f, 0.0, 1.0);
    REQUIRE(std::abs(fr.main - fd) <= fr.budget, "Fresnel: |main - direct| = %.4f > budget %.4f",
            std::abs(fr.main - fd), fr.budget);

    Rng rng(12);
    int ok = 0;
    for (int i = 0; i < 50; ++i) {
        const double q = rng.uniform(0.5, 2.5);
        const double b3 = rng.uniform(-q / 9.6, q / 9.6);
        const double lin = rng.uniform(-0.3, 0.3);
        const double cen = rng.uniform(-1.0, 1.0);
        const double w1 = rng.uniform(0.3, 1.5), w2 = rng.uniform(0.3, 1.5);
        auto f = [=](double x) {
            const double u = x - cen;
            return (q + b3 * u) * u * u + lin * u;
        };
        auto f1 = [=](double x) {
            const double u = x - cen;
            return (2.0 * q + 3.0 * b3 * u) * u + lin;
        };
        auto f2 = [=](double x) { return 2.0 * q + 6.0 * b3 * (x - cen); };
        const double a = cen - w1, b = cen + w2;
        const double f2_min = 2.0 * q - 6.0 * std::abs(b3) * std::max(w1, w2);
        const SaddleSpec spec{f, f1, f2, a, b, 1.0 / f2_min, w1 + w2};
        const SaddleResult sr = saddle_point(spec);
        if (std::abs(sr.main - direct(f, a, b)) <= sr.budget) ++ok;
    }
    REQUIRE(ok >= 48, "randomized suite: %d/50 within budget (need >= 48)", ok);
    notef(note, "Fresnel within budget, suite %d/50", ok);
    return true;
}

// 13. Phase-point sums: relative residual against the main term at most 0.25
//     at T = 1e5 for phi = 0 and pi/4; phi = 0 summands real to 1e-9.
bool crit13(std::string& note) {
    const PhaseSumResult p0 = phase_point_sum(1e5, 0.0);
    REQUIRE(p0.realness_defect <= 1e-9, "phi=0 summands not real: defect %.3g",
            p0.realness_defect);
    REQUIRE(p0.residual_rel <= kPhaseResidual, "phi=0: residual %.4f exceeds %.2f",
            p0.residual_rel, kPhaseResidual);
    const PhaseSumResult p4 = phase_point_sum(1e5, kPi / 4.0);
    REQUIRE(p4.residual_rel <= kPhaseResidual, "phi=pi/4: residual %.4f exceeds %.2f",
            p4.residual_rel, kPhaseResidual);
    notef(note, "residuals %.3f / %.3f over %llu points", p0.residual_rel, p4.residual_rel,
          static_cast<unsigned long long>(p0.points));
    return true;
}

// 14. Determinism: every CLI experiment emits byte-identical output with
//     --threads 1 and --threads 8.
bool crit14(std::string& note) {
    fs::path bin = g_exe_dir / "zhardy";
    if (!fs::exists(bin)) bin = fs::path(".") / "zhardy";
    REQUIRE(fs::exists(bin), "CLI binary not found next to the acceptance binary");

    const fs::path tmp =
        fs::temp_directory_path() / ("zhardy-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(tmp);

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    };

    const std::vector<std::pair<std::string, std::string>> cases = {
        {"eval", "eval --t 1000.5"},
        {"zeros", "zeros --t0 14 --t1 120 --oracle-refine"},
        {"gaps", "gaps --t0 100 --t1 300"},
        {"moment", "moment --T0 1000 --T1 1040 --k 2 --abs"},
        {"cubic", "cubic --T 500 --format json"},
        {"shift2", "shift2 --T 2000 --alpha 1"},
        {"shift3", "shift3 --T 500 --U 1"},
        {"expsum", "expsum --N 4096"},
        {"signdist", "signdist --T 2000 --H 500"},
        {"clt", "clt --T 100000 --m 2000 --seed 7"},
        {"phasesum", "phasesum --T 20000 --phi 0.7853981633974483"},
        {"growth", "growth --T0 1000 --T1 4000 --k 2"},
    };
    for (const auto& [name, args] : cases) {
        const fs::path f1 = tmp / (name + ".t1"), f8 = tmp / (name + ".t8");
        for (const auto& [threads, file] : {std::pair{"1", f1}, std::pair{"8", f8}}) {
            const std::string cmd = "\"" + bin.string() + "\" " + args + " --threads " + threads +
                                    " > \"" + file.string() + "\" 2>/dev/null";
            REQUIRE(std::system(cmd.c_str()) == 0, "%s exited nonzero with --threads %s",
                    name.c_str(), threads);
        }
        const std::string a = slurp(f1), b = slurp(f8);
        REQUIRE(!a.empty(), "%s produced no output", name.c_str());
        REQUIRE(a == b, "%s output differs between --threads 1 and --threads 8 (%zu vs %zu bytes)",
                name.c_str(), a.size(), b.size());
    }

    // The file-writer path as well: zeros --out must be byte-stable too.
    const fs::path o1 = tmp / "zeros_out.t1", o8 = tmp / "zeros_out.t8";
    for (const auto& [threads, file] : {std::pair{"1", o1}, std::pair{"8", o8}}) {
        const std::string cmd = "\"" + bin.string() + "\" zeros --t0 14 --t1 120 --threads " +
                                threads + " --out \"" + file.string() + "\" >/dev/null 2>/dev/null";
        REQUIRE(std::system(cmd.c_str()) == 0, "zeros --out exited nonzero with --threads %s",
                threads);
    }
    REQUIRE(slurp(o1) == slurp(o8), "zeros --out file differs between thread counts");

    std::error_code ec;
    fs::remove_all(tmp, ec);
    notef(note, "%zu experiments byte-identical across {1, 8} threads", cases.size() + 1);
    return true;
}

}  // namespace

int main(int, char** argv) {
    g_exe_dir = fs::path(argv[0]).parent_path();
    if (g_exe_dir.empty()) g_exe_dir = ".";

    struct Criterion {
        const char* label;
        bool (*run)(std::string&);
    };
    const std::vector<Criterion> criteria = {
        {"01 cross-method agreement", crit01},
        {"02 error-model scaling", crit02},
        {"03 zero census", crit03},
        {"04 first-moment bound", crit04},
        {"05 cubic explicit formula", crit05},
        {"06 quartic main term", crit06},
        {"07 shifted second moment", crit07},
        {"08 shifted cubic window", crit08},
        {"09 moment growth bands", crit09},
        {"10 sign distribution", crit10},
        {"11 central limit statistics", crit11},
        {"12 stationary-phase budget", crit12},
        {"13 phase-point sums", crit13},
        {"14 CLI determinism", crit14},
    };

    int failed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const Criterion& c : criteria) {
        g_crit = c.label;
        const auto c0 = std::chrono::steady_clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            std::printf("[FAIL] %s: unexpected exception: %s\n", c.label, e.what());
        }
        if (ok)
            std::printf("[PASS] %s: %s (%.1fs)\n", c.label, note.c_str(), seconds_since(c0));
        else
            ++failed;
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/14 passed in %.1fs\n", 14 - failed, seconds_since(t0));
    return failed == 0 ? 0 : 1;
}
