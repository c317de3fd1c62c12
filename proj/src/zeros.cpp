#include "zhardy/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "zhardy/oracle.hpp"
#include "zhardy/parallel.hpp"
#include "zhardy/roots.hpp"
#include "zhardy/rs.hpp"
#include "zhardy/sum.hpp"
#include "zhardy/types.hpp"

namespace zhardy {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kOracleDigits = 12;    // plenty against the 1e-9 uncertainty floor
constexpr double kXtol = 4e-10;      // Brent bracket tolerance
constexpr double kCensusSlack = 2.2; // per-window |found - expected| before a rescan

double mean_gap(double t) { return kTwoPi / std::log(std::max(t, 10.0) / kTwoPi); }

// An ordinate plus an honest bound on its distance to the true zero: the
// refined root sits where the *evaluator* vanishes, so its own error bound
// divided by the local slope dominates the Brent tolerance.
struct Found {
    double gamma;
    double unc;
};

struct WindowScan {
    std::vector<Found> gammas;
    std::uint64_t near_misses = 0;
};

double rs_val(double t) { return z_rs(t, 1).value; }
double oracle_val(double t) { return z_oracle(t, kOracleDigits).value; }

// One grid pass over [lo, hi]: sign-change cells get Brent refinement on the
// scan evaluator; cells with |Z| under 5x the evaluator error at both ends
// are re-probed with the oracle at 1/8 substeps (signs there are not
// trustworthy, and a zero pair may hide inside the cell).
WindowScan grid_scan(double lo, double hi, double step) {
    WindowScan out;
    const auto n = static_cast<std::uint64_t>(std::ceil((hi - lo) / step));
    const double h = (hi - lo) / static_cast<double>(n);
    std::vector<double> val(n + 1), err(n + 1);
    for (std::uint64_t j = 0; j <= n; ++j) {
        const ZValue z = z_rs(lo + h * static_cast<double>(j), 1);
        val[j] = z.value;
        err[j] = z.err;
    }
    auto pos = [](double v) { return v >= 0.0; };
    for (std::uint64_t j = 0; j < n; ++j) {
        const double xa = lo + h * static_cast<double>(j);
        const double xb = lo + h * static_cast<double>(j + 1);
        if (std::abs(val[j]) < 5.0 * err[j] && std::abs(val[j + 1]) < 5.0 * err[j + 1]) {
            ++out.near_misses;
            double pv[9];
            for (int i = 0; i < 9; ++i) pv[i] = oracle_val(xa + h * i / 8.0);
            for (int i = 0; i < 8; ++i)
                if (pos(pv[i]) != pos(pv[i + 1])) {
                    const RootResult r = brent_root(oracle_val, xa + h * i / 8.0,
                                                    xa + h * (i + 1) / 8.0, pv[i], pv[i + 1],
                                                    kXtol);
                    out.gammas.push_back({r.root, 1e-9});
                }
        } else if (pos(val[j]) != pos(val[j + 1])) {
            const RootResult r = brent_root(rs_val, xa, xb, val[j], val[j + 1], kXtol);
            const double slope = std::abs(val[j + 1] - val[j]) / h;
            const double shift = slope > 0.0 ? z_rs(r.root, 1).err / slope : h;
            out.gammas.push_back({r.root, std::max(1e-9, shift)});
        }
    }
    return out;
}
}  // namespace

double n_rvm(double T) {
    if (!(T > 0.0)) throw std::domain_error("n_rvm: requires T > 0");
    const double x = T / kTwoPi;
    return x * std::log(x) - x;
}

ZeroTable scan_zeros(double t0, double t1, double step, int threads, bool oracle_refine) {
    if (!(t0 >= 10.0) || !(t1 > t0))
        throw std::domain_error("scan_zeros: requires 10 <= t0 < t1");
    if (!(t1 <= 4.0e6))
        throw std::domain_error("scan_zeros: t1 above the grid evaluator's domain (4e6)");
    const double max_step = 0.5 / std::log(t1);
    if (step == 0.0) step = max_step;
    if (!(step > 0.0) || step > max_step * (1.0 + 1e-12))
        throw std::domain_error("scan_zeros: step must be in (0, 0.5/log(t1)]");

    // Windows of ~100 mean gaps, fixed by (t0, t1, step) alone.
    std::vector<std::pair<double, double>> windows;
    for (double x = t0; x < t1;) {
        const double len = 100.0 * mean_gap(x);
        const double end = (x + 1.25 * len >= t1) ? t1 : x + len;
        windows.emplace_back(x, end);
        x = end;
    }

    struct WinOut {
        std::vector<Found> gammas;
        std::uint64_t near_misses = 0, rescans = 0, unreconciled = 0;
    };
    std::vector<WinOut> outs(windows.size());
    const int nt = resolve_threads(threads);
    parallel_for(static_cast<std::int64_t>(windows.size()), nt, [&](std::int64_t i) {
        const auto [lo, hi] = windows[i];
        WindowScan s = grid_scan(lo, hi, step);
        WinOut& o = outs[i];
        o.near_misses = s.near_misses;
        const double expected = n_rvm(hi) - n_rvm(lo);
        if (std::abs(static_cast<double>(s.gammas.size()) - expected) > kCensusSlack) {
            WindowScan fine = grid_scan(lo, hi, step / 8.0);
            o.rescans = 1;
            o.near_misses += fine.near_misses;
            if (std::abs(static_cast<double>(fine.gammas.size()) - expected) > kCensusSlack)
                o.unreconciled = 1;
            s.gammas = std::move(fine.gammas);
        }
        o.gammas = std::move(s.gammas);
    });

    ZeroTable table;
    table.t_lo = t0;
    table.t_hi = t1;
    table.step = step;
    for (auto& o : outs) {
        table.near_misses += o.near_misses;
        table.rescans += o.rescans;
        table.unreconciled += o.unreconciled;
        for (const Found& g : o.gammas)
            table.records.push_back({table.records.size() + 1, g.gamma, g.unc});
    }

    if (oracle_refine) {
        table.oracle_refined = true;
        parallel_for(static_cast<std::int64_t>(table.records.size()), nt, [&](std::int64_t i) {
            ZeroRecord& rec = table.records[i];
            // Window wide enough to beat the grid evaluator's positional
            // error, well short of the local mean gap.
            double w = std::max(1e-6, 5.0 * z_rs(rec.gamma, 1).err);
            const double wmax = 0.25 * mean_gap(rec.gamma);
            double fa = oracle_val(rec.gamma - w), fb = oracle_val(rec.gamma + w);
            auto pos = [](double v) { return v >= 0.0; };
            while (pos(fa) == pos(fb) && w * 4.0 <= wmax) {
                w *= 4.0;
                fa = oracle_val(rec.gamma - w);
                fb = oracle_val(rec.gamma + w);
            }
            if (pos(fa) == pos(fb)) return;  // keep the grid-grade ordinate
            const RootResult r =
                brent_root(oracle_val, rec.gamma - w, rec.gamma + w, fa, fb, kXtol);
            rec.gamma = r.root;
            rec.uncertainty = 1e-9;
        });
        std::sort(table.records.begin(), table.records.end(),
                  [](const ZeroRecord& a, const ZeroRecord& b) { return a.gamma < b.gamma; });
        for (std::size_t i = 0; i < table.records.size(); ++i)
            table.records[i].index = i + 1;
    }
    return table;
}

GapStats gap_moment(const ZeroTable& table, double alpha) {
    if (table.records.size() < 2)
        throw std::domain_error("gap_moment: needs at least two zeros");
    if (!(alpha >= 0.0)) throw std::domain_error("gap_moment: requires alpha >= 0");
    NeumaierSum sum;
    for (std::size_t i = 1; i < table.records.size(); ++i)
        sum.add(std::pow(table.records[i].gamma - table.records[i - 1].gamma, alpha));
    return {alpha, sum.value(), table.records.size() - 1};
}

std::vector<double> delta_series(const ZeroTable& table) {
    if (table.records.size() < 2)
        throw std::domain_error("delta_series: needs at least two zeros");
    std::vector<double> out(table.records.size() - 1);
    for (std::size_t i = 0; i + 1 < table.records.size(); ++i)
        out[i] = (table.records[i + 1].gamma - table.records[i].gamma) *
                 std::log(table.records[i].gamma / kTwoPi) / kTwoPi;
    return out;
}

void write_zero_csv(const ZeroTable& table, std::ostream& os) {
    os << "index,gamma,uncertainty\n";
    char line[96];
    for (const auto& r : table.records) {
        std::snprintf(line, sizeof line, "%llu,%.15g,%.15g\n",
                      static_cast<unsigned long long>(r.index), r.gamma, r.uncertainty);
        os << line;
    }
}

void save_zero_table(const ZeroTable& table, const std::string& csv_path) {
    std::ofstream csv(csv_path, std::ios::binary);  // binary: keep LF on every platform
    if (!csv) throw std::runtime_error("save_zero_table: cannot open " + csv_path);
    write_zero_csv(table, csv);
    csv.close();

    nlohmann::json j;
    j["schema"] = 1;
    j["t_lo"] = table.t_lo;
    j["t_hi"] = table.t_hi;
    j["step"] = table.step;
    j["count"] = table.records.size();
    j["oracle_refined"] = table.oracle_refined;
    j["near_misses"] = table.near_misses;
    j["rescans"] = table.rescans;
    j["unreconciled"] = table.unreconciled;
    j["version"] = kVersion;
    std::ofstream side(csv_path + ".json", std::ios::binary);
    if (!side) throw std::runtime_error("save_zero_table: cannot open " + csv_path + ".json");
    side << j.dump(2) << "\n";
}

}  // namespace zhardy
