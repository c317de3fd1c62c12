#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "zhardy/divisor.hpp"
#include "zhardy/oscint.hpp"
#include "zhardy/types.hpp"
#include "zhardy/zeros.hpp"

namespace zhardy {

struct MomentResult {
    int k;
    double T0, T1;
    double value;
    double err;
    bool absolute;
    bool converged;
    std::size_t evals;
};

// F_k over [T0, T1] (absolute selects |Z|^k); delegates to integrate_zk.
MomentResult f_moment(double T0, double T1, int k, bool absolute, double tol = 0.0,
                      int threads = 0, const ZeroTable* zeros = nullptr);

// Cumulative F_1(T_i) = int_a^{T_i} Z dt for an ascending breakpoint list,
// computed as one shared pass over consecutive segments.
std::vector<double> f1_prefix(double a, const std::vector<double>& T_list, double tol = 0.0,
                              int threads = 0);

// Decomposition of [T, T+H] into maximal sign-constant intervals of Z.
// K+/K- are the measures, I+/I- the signed integrals over the positive and
// negative sets. int_z re-integrates Z over the whole window independently
// (different panelization), so I+ + I- = int_z is an honest cross-check;
// int_abs_z shares the pieces, so I+ - I- = int_abs_z holds by construction.
struct SignPartition {
    struct Piece {
        double lo, hi;
        int sign;  // +1 or -1
        double integral;
    };
    std::vector<Piece> intervals;
    double Kplus = 0.0, Kminus = 0.0;
    double Iplus = 0.0, Iminus = 0.0;
    double int_z = 0.0;
    double int_abs_z = 0.0;
    double err = 0.0;
    bool converged = true;
};
SignPartition sign_partition(double T, double H, int threads = 0);

struct ExplicitFormulaResult {
    double value;
    std::uint64_t n_lo, n_hi;  // inclusive summation bounds; empty when n_lo > n_hi
    std::string truncation;
    bool empty = false;
};

// 2 pi sqrt(2/3) sum d_3(n) n^{-1/6} cos(3 pi n^{2/3} + pi/8) over
// (T/2pi)^{3/2} <= n <= (T/pi)^{3/2}; pairs with the signed cubic moment
// over [T, 2T] for the O(T^{3/4}) residual check.
ExplicitFormulaResult cubic_rhs(double T, const DivisorTable& d3);

// Shifted second moment int_0^T Z(t) Z(t + U) dt with U = alpha / log T,
// against sinc(alpha/2) T log T + C T cos(alpha/2). The constant C of the
// second term is ambiguous in print; both readings are implemented and the
// quadrature arbitrates.
enum class HallVariant {
    AsPrinted,   // C = 2 gamma - 1 - 2 pi
    LogVariant,  // C = 2 gamma - 1 - log(2 pi)
};
struct HallResult {
    double lhs;        // quadrature value
    double main;       // main terms under the chosen variant
    double residual;   // lhs - main
    double allowance;  // alpha T / log T + sqrt(T) log T
    double U;
    bool converged;
};
HallResult hall_shifted(double T, double alpha, HallVariant variant, double tol = 0.0,
                        int threads = 0);

// Explicit side of the shifted cubic moment: 2 pi sqrt(2/3) times the sum of
// Re[ h(n,U) n^{-1/6 + iU/3} e^{-i (3 pi n^{2/3} + pi/8)} ], second-order
// shift corrections dropped. The printed summation window is empty as
// written (its bounds descend), so three candidate windows are implemented
// and arbitrated against quadrature of int_{T/2}^T Z^2(t) Z(t+U) dt.
enum class Shift3Range {
    AsPrinted,    // [(T/pi)^{3/2}, (T/2pi)^{3/2}] -- descends, empty
    Ascending,    // [(T/2pi)^{3/2}, (T/pi)^{3/2}]
    HalfShifted,  // [(T/4pi)^{3/2}, (T/2pi)^{3/2}]
};
ExplicitFormulaResult shifted_cubic_rhs(double T, double U, Shift3Range range,
                                        const DivisorTable& d2);

// Direct quadrature of the companion integral int_{T/2}^T Z^2(t) Z(t+U) dt.
MomentResult shifted_cubic_lhs(double T, double U, double tol = 0.0, int threads = 0);

// R_k(T) = int_T^{2T} |Z|^k dt / (T (log T)^{k^2/4}), tabulated over T_list.
// One fixed-panel pass per T shares every Z evaluation across all k (the
// |Z'|-kinks are not panel-aligned here; the ~0.1% bias is irrelevant for
// factor-band diagnostics).
struct GrowthRow {
    int k;
    double T;
    double integral;
    double ratio;
    std::size_t evals;
};
std::vector<GrowthRow> growth_diagnostics(const std::vector<int>& ks,
                                          const std::vector<double>& T_list, int threads = 0);
std::vector<GrowthRow> growth_diagnostics(int k, const std::vector<double>& T_list,
                                          int threads = 0);

// log|Z(t)| / sqrt(0.5 log log T) at m seed-determined uniform t in [T, 2T].
// Draws with |Z| < 1e-8 are redrawn sequentially (guard against log 0), so
// output is identical for every thread count.
struct CltSample {
    double T;
    std::uint64_t m;
    std::uint64_t seed;
    std::vector<double> values;  // draw order
    double ks_stat;              // Kolmogorov-Smirnov distance to standard normal
    std::uint64_t rejections;
};
CltSample clt_sample(double T, std::uint64_t m, std::uint64_t seed, int threads = 0);

// Sum of zeta(1/2 + i t_j) = e^{-i theta(t_j)} Z(t_j) over the t_j <= T
// where zeta's phase lies on the ray e^{i phi} R, i.e. theta(t_j) = -phi
// (mod pi), solved monotonically for t >= 10. Compared against the main
// term 2 e^{i phi} cos(phi) (T/2pi) log(T/2pi e).
struct PhaseSumResult {
    std::complex<double> empirical;
    std::complex<double> main;
    std::uint64_t points;
    double residual_rel;     // |empirical - main| relative to |main| (or to the T log T scale)
    double realness_defect;  // max_j |Im summand_j| / max(1, |summand_j|); ~0 at phi = 0
};
PhaseSumResult phase_point_sum(double T, double phi);

}  // namespace zhardy
