#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zhardy {

struct ZeroRecord {
    std::uint64_t index;  // 1-based position within its table
    double gamma;
    double uncertainty;  // the true ordinate lies in gamma +/- uncertainty
};

struct ZeroTable {
    std::vector<ZeroRecord> records;  // strictly increasing in gamma
    double t_lo = 0.0, t_hi = 0.0;
    double step = 0.0;               // grid step used by the scan
    bool oracle_refined = false;     // ordinates re-refined against the oracle
    std::uint64_t near_misses = 0;   // grid cells re-probed with the oracle
    std::uint64_t rescans = 0;       // count-flagged windows re-scanned at step/8
    std::uint64_t unreconciled = 0;  // windows still off after their rescan
};

// Sign-change scan of Z over [t0, t1] (grid of z_rs order-1 values, Brent
// refinement localizing the sign flip to ~1e-9). step = 0 picks the bound
// 0.5/log(t1); coarser steps are rejected (risk of missing zero pairs).
// `uncertainty` is honest about the evaluator: it is the refined root's
// error bound divided by the local slope (floor 1e-9), i.e. how far the
// true ordinate can sit from the reported one. Grid cells where |Z| sits
// below 5x the evaluator error at both ends are re-probed with the oracle
// at step/8. Each window of ~100 mean gaps is reconciled against the
// Riemann-von Mangoldt count and re-scanned at step/8 when off by > 2.2.
// oracle_refine re-polishes every ordinate with a second Brent stage on the
// multiprecision oracle, shrinking the uncertainty to the 1e-9 floor.
ZeroTable scan_zeros(double t0, double t1, double step = 0.0, int threads = 0,
                     bool oracle_refine = false);

// Riemann-von Mangoldt main term (T/2pi)log(T/2pi) - T/2pi. The caller adds
// the O(log T) tolerance. Below the first zero this is not a count: at
// T = 2pi it returns -1 by direct substitution.
double n_rvm(double T);

struct GapStats {
    double alpha;
    double value;         // sum over consecutive gaps of (gap)^alpha
    std::uint64_t count;  // number of gaps; alpha = 0 makes value == count
};
GapStats gap_moment(const ZeroTable& table, double alpha);

// Normalized gaps delta_n = (gamma_{n+1} - gamma_n) log(gamma_n / 2pi) / 2pi;
// unit mean over long ranges.
std::vector<double> delta_series(const ZeroTable& table);

// CSV persistence: header `index,gamma,uncertainty`, 15 significant digits,
// LF line endings; save_zero_table also writes a `<csv_path>.json` sidecar
// with the scan parameters and code version.
void write_zero_csv(const ZeroTable& table, std::ostream& os);
void save_zero_table(const ZeroTable& table, const std::string& csv_path);

}  // namespace zhardy
