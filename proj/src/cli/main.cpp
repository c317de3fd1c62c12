#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"
#include "zhardy/calibration.hpp"
#include "zhardy/divisor.hpp"
#include "zhardy/expsum.hpp"
#include "zhardy/moments.hpp"
#include "zhardy/oracle.hpp"
#include "zhardy/report.hpp"
#include "zhardy/sum.hpp"
#include "zhardy/theta.hpp"
#include "zhardy/types.hpp"
#include "zhardy/zeros.hpp"
#include "zhardy/zeval.hpp"

namespace {

using namespace zhardy;

std::string resolve_cache_dir(const cli::RunConfig& c) {
    if (!c.cache_dir.empty()) return c.cache_dir;
    if (const char* env = std::getenv("ZHARDY_CACHE_DIR"); env && *env) return env;
    return ".zhardy_cache";
}

void meta_kv(OutputRecord& r, const std::string& key, const std::string& v) {
    r.meta += ';';
    r.meta += key;
    r.meta += '=';
    r.meta += v;
}
void meta_kv(OutputRecord& r, const std::string& key, double v) { meta_kv(r, key, fmt_g15(v)); }
void meta_kv(OutputRecord& r, const std::string& key, std::uint64_t v) {
    meta_kv(r, key, std::to_string(v));
}
void meta_kv(OutputRecord& r, const std::string& key, bool v) {
    meta_kv(r, key, std::string(v ? "1" : "0"));
}

std::vector<OutputRecord> run_eval(const cli::RunConfig& c) {
    const ZValue z = z_eval(c.t);
    OutputRecord rz{.quantity = "Z", .T = c.t, .value = z.value, .err = z.err};
    meta_kv(rz, "method", std::string(method_name(z.method)));
    OutputRecord rt{.quantity = "theta", .T = c.t};
    if (std::abs(c.t) >= 2.0) {
        const PhaseValue th = theta(c.t);
        rt.value = th.value;
        rt.err = th.err;
        meta_kv(rt, "method", std::string("asymptotic"));
    } else {
        rt.value = theta_oracle(c.t, 16);
        rt.err = 1e-15 * std::max(1.0, std::abs(rt.value));
        meta_kv(rt, "method", std::string("oracle"));
    }
    return {rz, rt};
}

std::vector<OutputRecord> run_moment(const cli::RunConfig& c, bool& ok) {
    const MomentResult m = f_moment(c.T0, c.T1, c.k, c.absolute, c.tol, c.threads);
    ok = m.converged;
    OutputRecord r{.quantity = c.absolute ? "F_abs" : "F",
                   .T = c.T0,
                   .H = c.T1 - c.T0,
                   .k = static_cast<double>(c.k),
                   .value = m.value,
                   .err = m.err};
    meta_kv(r, "evals", static_cast<std::uint64_t>(m.evals));
    meta_kv(r, "converged", m.converged);
    return {r};
}

std::vector<OutputRecord> run_signdist(const cli::RunConfig& c, bool& ok) {
    const SignPartition sp = sign_partition(c.T, c.H, c.threads);
    ok = sp.converged;
    const auto row = [&](const char* q, double v) {
        return OutputRecord{.quantity = q, .T = c.T, .H = c.H, .value = v};
    };
    std::vector<OutputRecord> out{row("K_plus", sp.Kplus),     row("K_minus", sp.Kminus),
                                  row("I_plus", sp.Iplus),     row("I_minus", sp.Iminus),
                                  row("int_Z", sp.int_z),      row("int_absZ", sp.int_abs_z)};
    out[4].err = sp.err;
    meta_kv(out[4], "pieces", static_cast<std::uint64_t>(sp.intervals.size()));
    meta_kv(out[4], "converged", sp.converged);
    return out;
}

std::vector<OutputRecord> run_cubic(const cli::RunConfig& c, bool& ok) {
    const auto n_need = static_cast<std::uint64_t>(std::pow(c.T / std::numbers::pi, 1.5)) + 1;
    const DivisorTable d3 = dk_cached(3, n_need, resolve_cache_dir(c));
    const ExplicitFormulaResult rhs = cubic_rhs(c.T, d3);
    const MomentResult lhs = f_moment(c.T, 2.0 * c.T, 3, false, c.tol, c.threads);
    ok = lhs.converged;

    OutputRecord rl{.quantity = "cubic_lhs", .T = c.T, .k = 3.0, .value = lhs.value, .err = lhs.err};
    meta_kv(rl, "evals", static_cast<std::uint64_t>(lhs.evals));
    meta_kv(rl, "converged", lhs.converged);
    OutputRecord rr{.quantity = "cubic_rhs", .T = c.T, .k = 3.0, .value = rhs.value};
    meta_kv(rr, "n_lo", rhs.n_lo);
    meta_kv(rr, "n_hi", rhs.n_hi);
    meta_kv(rr, "truncation", rhs.truncation);
    OutputRecord rd{.quantity = "cubic_resid", .T = c.T, .k = 3.0, .value = lhs.value - rhs.value};
    OutputRecord ra{.quantity = "cubic_allow",
                    .T = c.T,
                    .k = 3.0,
                    .value = cal::kCubicCoef * std::pow(c.T, 0.75)};
    return {rl, rr, rd, ra};
}

std::vector<OutputRecord> run_shift2(const cli::RunConfig& c, bool& ok) {
    const HallResult ap = hall_shifted(c.T, c.alpha, HallVariant::AsPrinted, c.tol, c.threads);
    const HallResult lv = hall_shifted(c.T, c.alpha, HallVariant::LogVariant, c.tol, c.threads);
    ok = ap.converged && lv.converged;

    OutputRecord rl{.quantity = "hall_lhs", .T = c.T, .U = ap.U, .value = ap.lhs};
    meta_kv(rl, "alpha", c.alpha);
    meta_kv(rl, "converged", ok);
    std::vector<OutputRecord> out{rl};
    const char* names[2] = {"as-printed", "log-variant"};
    const HallResult* res[2] = {&ap, &lv};
    for (int i = 0; i < 2; ++i) {
        OutputRecord rm{.quantity = "hall_main", .T = c.T, .U = res[i]->U, .value = res[i]->main};
        meta_kv(rm, "variant", std::string(names[i]));
        OutputRecord rr{
            .quantity = "hall_resid", .T = c.T, .U = res[i]->U, .value = res[i]->residual};
        meta_kv(rr, "variant", std::string(names[i]));
        out.push_back(rm);
        out.push_back(rr);
    }
    OutputRecord ra{.quantity = "hall_allow",
                    .T = c.T,
                    .U = ap.U,
                    .value = cal::kHallCoef * ap.allowance};
    out.push_back(ra);
    const int best = std::abs(ap.residual) <= std::abs(lv.residual) ? 0 : 1;
    OutputRecord rb{.quantity = "hall_best", .T = c.T, .U = ap.U, .value = res[best]->residual};
    meta_kv(rb, "variant", std::string(names[best]));
    out.push_back(rb);
    return out;
}

std::vector<OutputRecord> run_shift3(const cli::RunConfig& c, bool& ok) {
    struct RangeSpec {
        const char* name;
        Shift3Range range;
        double x_hi;
    };
    const double hi_half = std::pow(c.T / (2.0 * std::numbers::pi), 1.5);
    const double hi_full = std::pow(c.T / std::numbers::pi, 1.5);
    const RangeSpec all[3] = {{"as-printed", Shift3Range::AsPrinted, hi_half},
                              {"ascending", Shift3Range::Ascending, hi_full},
                              {"half-shifted", Shift3Range::HalfShifted, hi_half}};
    std::vector<RangeSpec> ranges;
    for (const RangeSpec& r : all)
        if (c.range == "all" || c.range == r.name) ranges.push_back(r);

    double x_need = 1.0;
    for (const RangeSpec& r : ranges) x_need = std::max(x_need, r.x_hi);
    const DivisorTable d2 =
        dk_cached(2, static_cast<std::uint64_t>(x_need) + 1, resolve_cache_dir(c));

    const MomentResult lhs = shifted_cubic_lhs(c.T, c.U, c.tol, c.threads);
    ok = lhs.converged;
    OutputRecord rl{
        .quantity = "shift3_lhs", .T = c.T, .U = c.U, .value = lhs.value, .err = lhs.err};
    meta_kv(rl, "evals", static_cast<std::uint64_t>(lhs.evals));
    meta_kv(rl, "converged", lhs.converged);
    std::vector<OutputRecord> out{rl};

    const RangeSpec* best = nullptr;
    double best_resid = 0.0;
    for (const RangeSpec& r : ranges) {
        const ExplicitFormulaResult rhs = shifted_cubic_rhs(c.T, c.U, r.range, d2);
        OutputRecord rr{.quantity = "shift3_rhs", .T = c.T, .U = c.U, .value = rhs.value};
        meta_kv(rr, "range", std::string(r.name));
        meta_kv(rr, "n_lo", rhs.n_lo);
        meta_kv(rr, "n_hi", rhs.n_hi);
        meta_kv(rr, "empty", rhs.empty);
        meta_kv(rr, "truncation", rhs.truncation);
        OutputRecord rd{
            .quantity = "shift3_resid", .T = c.T, .U = c.U, .value = lhs.value - rhs.value};
        meta_kv(rd, "range", std::string(r.name));
        meta_kv(rd, "empty", rhs.empty);
        out.push_back(rr);
        out.push_back(rd);
        if (!rhs.empty && (!best || std::abs(rd.value) < std::abs(best_resid))) {
            best = &r;
            best_resid = rd.value;
        }
    }
    OutputRecord ra{.quantity = "shift3_allow",
                    .T = c.T,
                    .U = c.U,
                    .value = cal::kShift3Coef * std::pow(c.T, 0.75)};
    out.push_back(ra);
    if (best) {
        OutputRecord rb{.quantity = "shift3_best", .T = c.T, .U = c.U, .value = best_resid};
        meta_kv(rb, "range", std::string(best->name));
        out.push_back(rb);
    }
    return out;
}

std::vector<OutputRecord> run_expsum(const cli::RunConfig& c) {
    std::vector<OutputRecord> out;
    const auto rows = [&out](const ExpSumResult& r) {
        OutputRecord re{.quantity = "expsum_re", .value = r.value.real()};
        OutputRecord im{.quantity = "expsum_im", .value = r.value.imag()};
        OutputRecord nm{.quantity = "expsum_norm", .value = r.normalized};
        for (OutputRecord* p : {&re, &im, &nm}) {
            meta_kv(*p, "N", r.N0);
            meta_kv(*p, "N1", r.N1);
            meta_kv(*p, "terms", r.terms);
        }
        out.push_back(re);
        out.push_back(im);
        out.push_back(nm);
    };
    if (c.N != 0) {
        const DivisorTable d3 = dk_cached(3, c.N1, resolve_cache_dir(c));
        rows(exp_sum_d3(c.N, c.N1, d3));
    } else {
        const DivisorTable d3 =
            dk_cached(3, std::uint64_t{1} << (c.dyadic_hi + 1), resolve_cache_dir(c));
        for (int j = c.dyadic_lo; j <= c.dyadic_hi; ++j)
            rows(exp_sum_d3(std::uint64_t{1} << j, std::uint64_t{1} << (j + 1), d3));
    }
    return out;
}

std::vector<OutputRecord> run_gaps(const cli::RunConfig& c) {
    const ZeroTable tab = scan_zeros(c.t0, c.t1, c.step, c.threads, false);
    OutputRecord rc{.quantity = "zero_count",
                    .T = c.t0,
                    .H = c.t1 - c.t0,
                    .value = static_cast<double>(tab.records.size())};
    meta_kv(rc, "near_misses", static_cast<std::uint64_t>(tab.near_misses));
    meta_kv(rc, "rescans", static_cast<std::uint64_t>(tab.rescans));
    meta_kv(rc, "unreconciled", static_cast<std::uint64_t>(tab.unreconciled));
    std::vector<OutputRecord> out{rc};
    if (tab.records.size() >= 2) {
        const double alpha = std::isnan(c.alpha) ? 2.0 : c.alpha;
        const GapStats gs = gap_moment(tab, alpha);
        OutputRecord rg{.quantity = "gap_moment", .T = c.t0, .H = c.t1 - c.t0, .value = gs.value};
        meta_kv(rg, "alpha", alpha);
        meta_kv(rg, "count", static_cast<std::uint64_t>(gs.count));
        const std::vector<double> ds = delta_series(tab);
        NeumaierSum acc;
        for (double d : ds) acc.add(d);
        OutputRecord rd{.quantity = "delta_mean",
                        .T = c.t0,
                        .H = c.t1 - c.t0,
                        .value = acc.value() / static_cast<double>(ds.size())};
        meta_kv(rd, "count", static_cast<std::uint64_t>(ds.size()));
        out.push_back(rg);
        out.push_back(rd);
    }
    return out;
}

std::vector<OutputRecord> run_clt(const cli::RunConfig& c) {
    const CltSample s = clt_sample(c.T, c.m, c.seed, c.threads);
    OutputRecord rk{.quantity = "ks_stat", .T = c.T, .value = s.ks_stat};
    NeumaierSum sum;
    for (double v : s.values) sum.add(v);
    const double mean = sum.value() / static_cast<double>(s.values.size());
    NeumaierSum sq;
    for (double v : s.values) sq.add((v - mean) * (v - mean));
    const double sd = std::sqrt(sq.value() / static_cast<double>(s.values.size()));
    for (OutputRecord* p : {&rk}) {
        meta_kv(*p, "m", s.m);
        meta_kv(*p, "seed", s.seed);
        meta_kv(*p, "rejections", s.rejections);
    }
    OutputRecord rm{.quantity = "clt_mean", .T = c.T, .value = mean};
    OutputRecord rs{.quantity = "clt_sd", .T = c.T, .value = sd};
    return {rk, rm, rs};
}

std::vector<OutputRecord> run_phasesum(const cli::RunConfig& c) {
    const PhaseSumResult r = phase_point_sum(c.T, c.phi);
    OutputRecord re{.quantity = "phasesum_re", .T = c.T, .phi = c.phi, .value = r.empirical.real()};
    meta_kv(re, "points", r.points);
    OutputRecord im{.quantity = "phasesum_im", .T = c.T, .phi = c.phi, .value = r.empirical.imag()};
    OutputRecord mr{.quantity = "phasesum_main_re", .T = c.T, .phi = c.phi, .value = r.main.real()};
    OutputRecord mi{.quantity = "phasesum_main_im", .T = c.T, .phi = c.phi, .value = r.main.imag()};
    OutputRecord rr{.quantity = "phasesum_resid", .T = c.T, .phi = c.phi, .value = r.residual_rel};
    OutputRecord rl{
        .quantity = "phasesum_realness", .T = c.T, .phi = c.phi, .value = r.realness_defect};
    return {re, im, mr, mi, rr, rl};
}

std::vector<OutputRecord> run_growth(const cli::RunConfig& c) {
    std::vector<int> ks;
    if (c.k == 0)
        ks = {1, 2, 3, 4};
    else
        ks = {c.k};
    std::vector<double> T_list;
    for (double T = c.T0; T <= c.T1 * (1.0 + 1e-12); T *= 2.0) T_list.push_back(T);
    std::vector<OutputRecord> out;
    for (const GrowthRow& row : growth_diagnostics(ks, T_list, c.threads)) {
        OutputRecord r{.quantity = "R",
                       .T = row.T,
                       .k = static_cast<double>(row.k),
                       .value = row.ratio};
        meta_kv(r, "integral", row.integral);
        meta_kv(r, "evals", static_cast<std::uint64_t>(row.evals));
        out.push_back(r);
    }
    return out;
}

int run(const cli::RunConfig& c) {
    if (c.command == "zeros") {
        const ZeroTable tab = scan_zeros(c.t0, c.t1, c.step, c.threads, c.oracle_refine);
        if (c.out.empty()) {
            write_zero_csv(tab, std::cout);
        } else {
            save_zero_table(tab, c.out);
        }
        return 0;
    }

    bool ok = true;
    std::vector<OutputRecord> records;
    if (c.command == "eval") records = run_eval(c);
    else if (c.command == "moment") records = run_moment(c, ok);
    else if (c.command == "signdist") records = run_signdist(c, ok);
    else if (c.command == "cubic") records = run_cubic(c, ok);
    else if (c.command == "shift2") records = run_shift2(c, ok);
    else if (c.command == "shift3") records = run_shift3(c, ok);
    else if (c.command == "expsum") records = run_expsum(c);
    else if (c.command == "gaps") records = run_gaps(c);
    else if (c.command == "clt") records = run_clt(c);
    else if (c.command == "phasesum") records = run_phasesum(c);
    else if (c.command == "growth") records = run_growth(c);
    else throw std::logic_error("unreachable command " + c.command);

    for (OutputRecord& r : records) {
        meta_kv(r, "cmd", c.command);
        meta_kv(r, "version", std::string(kVersion));
    }

    std::ofstream file;
    if (!c.out.empty()) {
        file.open(c.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output path " + c.out);
    }
    std::ostream& os = c.out.empty() ? std::cout : file;
    if (c.format == "json")
        write_json(records, c.command, os);
    else
        write_csv(records, os);
    os.flush();
    if (!os) throw std::runtime_error("write failed for output path " + c.out);
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const cli::ParseOutcome outcome = cli::parse_config(args);
    if (outcome.exit_code >= 0) {
        (outcome.exit_code == 0 ? std::cout : std::cerr) << outcome.message << "\n";
        return outcome.exit_code;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const int rc = run(outcome.config);
        const std::chrono::duration<double, std::milli> ms =
            std::chrono::steady_clock::now() - start;
        std::fprintf(stderr, "zhardy: wall_ms=%.1f\n", ms.count());
        return rc;
    } catch (const ResourceError& e) {
        std::cerr << "zhardy: resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "zhardy: " << e.what() << "\n";
        return 1;
    }
}
