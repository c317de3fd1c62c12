#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace zhardy::cli {

// Everything a single invocation needs. NaN doubles mean "not supplied";
// commands read only the fields their subcommand declares.
struct RunConfig {
    std::string command;
    double t = std::numeric_limits<double>::quiet_NaN();
    double T = std::numeric_limits<double>::quiet_NaN();
    double H = std::numeric_limits<double>::quiet_NaN();
    double T0 = std::numeric_limits<double>::quiet_NaN();
    double T1 = std::numeric_limits<double>::quiet_NaN();
    double t0 = std::numeric_limits<double>::quiet_NaN();
    double t1 = std::numeric_limits<double>::quiet_NaN();
    double U = std::numeric_limits<double>::quiet_NaN();
    double phi = std::numeric_limits<double>::quiet_NaN();
    double alpha = std::numeric_limits<double>::quiet_NaN();
    double step = 0.0;  // 0 = automatic
    double tol = 0.0;   // 0 = automatic
    int k = 0;          // growth: 0 = all of {1,2,3,4}
    std::uint64_t N = 0;
    std::uint64_t N1 = 0;
    int dyadic_lo = -1;  // expsum: scan N = 2^j, j in [lo, hi]
    int dyadic_hi = -1;
    std::uint64_t m = 10000;
    std::uint64_t seed = 1;
    std::string range = "all";  // shift3: as-printed | ascending | half-shifted | all
    bool absolute = false;
    bool oracle_refine = false;
    int threads = 0;  // 0 = ZHARDY_THREADS or hardware
    std::string out;  // empty = stdout
    std::string format = "csv";
    std::string cache_dir;  // empty = ZHARDY_CACHE_DIR or ./.zhardy_cache
};

// exit_code < 0: proceed with config. Otherwise print message (stdout for
// help, stderr for errors) and exit with exit_code.
struct ParseOutcome {
    RunConfig config;
    int exit_code = -1;
    std::string message;
};

namespace detail {

inline std::string check_config(const RunConfig& c) {
    const auto bad = [&](const char* flag, const char* pre) {
        return std::string(c.command) + ": " + flag + ": requires " + pre;
    };
    if (c.command == "eval") {
        if (!std::isfinite(c.t)) return bad("--t", "a finite t");
    } else if (c.command == "zeros" || c.command == "gaps") {
        if (!(c.t0 >= 10.0 && c.t1 > c.t0)) return bad("--t0/--t1", "10 <= t0 < t1");
        if (!(c.t1 <= 4e6)) return bad("--t1", "t1 <= 4e6 (grid evaluator domain)");
        const double cap = 0.5 / std::log(c.t1);
        if (c.step != 0.0 && !(c.step > 0.0 && c.step <= cap * (1.0 + 1e-12)))
            return bad("--step", "0 < step <= 0.5/log(t1)");
        if (c.command == "gaps" && !std::isnan(c.alpha) && !(c.alpha >= 0.0))
            return bad("--alpha", "alpha >= 0");
    } else if (c.command == "moment") {
        if (!(c.T0 >= 0.0 && c.T1 > c.T0)) return bad("--T0/--T1", "0 <= T0 < T1");
    } else if (c.command == "signdist") {
        if (!(c.T >= 10.0)) return bad("--T", "T >= 10");
        if (!(c.H > 0.0)) return bad("--H", "H > 0");
        if (!(c.T + c.H <= 4e6)) return bad("--H", "T + H <= 4e6 (grid evaluator domain)");
    } else if (c.command == "cubic") {
        if (!(c.T > 0.0)) return bad("--T", "T > 0");
    } else if (c.command == "shift2") {
        if (!(c.T >= 10.0)) return bad("--T", "T >= 10");
        if (!(c.alpha > 0.0)) return bad("--alpha", "alpha > 0");
    } else if (c.command == "shift3") {
        if (!(c.T > 0.0)) return bad("--T", "T > 0");
        if (!(c.U >= 0.0 && c.U <= std::sqrt(c.T))) return bad("--U", "0 <= U <= sqrt(T)");
    } else if (c.command == "expsum") {
        const bool direct = c.N != 0 || c.N1 != 0;
        const bool dyadic = c.dyadic_lo >= 0 || c.dyadic_hi >= 0;
        if (direct == dyadic)
            return bad("--N/--dyadic-lo", "exactly one of (--N, --N1) or (--dyadic-lo, --dyadic-hi)");
        if (direct && !(c.N >= 1 && c.N < c.N1 && c.N1 <= 2 * c.N))
            return bad("--N/--N1", "1 <= N < N1 <= 2N");
        if (dyadic && !(c.dyadic_lo >= 0 && c.dyadic_lo <= c.dyadic_hi && c.dyadic_hi <= 25))
            return bad("--dyadic-lo/--dyadic-hi", "0 <= lo <= hi <= 25");
    } else if (c.command == "clt") {
        if (!(c.T >= 1e3)) return bad("--T", "T >= 1e3");
        if (c.m < 1000) return bad("--m", "m >= 1000");
    } else if (c.command == "phasesum") {
        if (!(c.T >= 20.0 && c.T <= 4e6)) return bad("--T", "20 <= T <= 4e6");
        if (!(c.phi >= 0.0 && c.phi < std::numbers::pi)) return bad("--phi", "phi in [0, pi)");
    } else if (c.command == "growth") {
        if (!(c.T0 >= 10.0 && c.T1 > c.T0)) return bad("--T0/--T1", "10 <= T0 < T1");
    }
    return {};
}

}  // namespace detail

inline ParseOutcome parse_config(const std::vector<std::string>& args) {
    ParseOutcome outcome;
    RunConfig& c = outcome.config;

    CLI::App app{"Numerical laboratory for Hardy's Z function on the critical line"};
    app.name("zhardy");
    app.require_subcommand(1);

    const auto add_common = [&c](CLI::App* sub, bool tol = true) {
        sub->add_option("--threads", c.threads, "worker threads (0 = auto)")
            ->check(CLI::Range(0, 1024));
        sub->add_option("--out", c.out, "output path (default stdout)");
        sub->add_option("--format", c.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        if (tol) sub->add_option("--tol", c.tol, "quadrature tolerance (0 = auto)")
                     ->check(CLI::NonNegativeNumber);
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate Z(t) and the phase theta(t)");
    eval->add_option("--t", c.t, "evaluation point")->required();
    add_common(eval, false);

    CLI::App* zeros = app.add_subcommand("zeros", "scan [t0, t1] for zeros of Z");
    zeros->add_option("--t0", c.t0, "scan start")->required();
    zeros->add_option("--t1", c.t1, "scan end")->required();
    zeros->add_option("--step", c.step, "grid step (0 = 0.5/log(t1))");
    zeros->add_flag("--oracle-refine", c.oracle_refine, "polish each zero with the reference evaluator");
    add_common(zeros, false);

    CLI::App* moment = app.add_subcommand("moment", "integrate Z^k or |Z|^k over [T0, T1]");
    moment->add_option("--T0", c.T0, "lower endpoint")->required();
    moment->add_option("--T1", c.T1, "upper endpoint")->required();
    moment->add_option("--k", c.k, "power")->required()->check(CLI::Range(1, 4));
    moment->add_flag("--abs", c.absolute, "integrate |Z|^k instead of Z^k");
    add_common(moment);

    CLI::App* signdist = app.add_subcommand(
        "signdist", "sign-split occupation times and integrals on [T, T+H]");
    signdist->add_option("--T", c.T, "window start")->required();
    signdist->add_option("--H", c.H, "window length")->required();
    add_common(signdist, false);

    CLI::App* cubic = app.add_subcommand(
        "cubic", "third moment over [T, 2T] against its divisor-sum explicit formula");
    cubic->add_option("--T", c.T, "dyadic base")->required();
    add_common(cubic);

    CLI::App* shift2 = app.add_subcommand(
        "shift2", "shifted second moment over [0, T] against both main-term variants");
    shift2->add_option("--T", c.T, "upper endpoint")->required();
    shift2->add_option("--alpha", c.alpha, "shift parameter (shift U = alpha/log T)")->required();
    add_common(shift2);

    CLI::App* shift3 = app.add_subcommand(
        "shift3", "shifted cubic moment over [T/2, T] against candidate summation ranges");
    shift3->add_option("--T", c.T, "upper endpoint")->required();
    shift3->add_option("--U", c.U, "shift")->required();
    shift3->add_option("--range", c.range, "summation range variant")
        ->check(CLI::IsMember({"as-printed", "ascending", "half-shifted", "all"}));
    add_common(shift3);

    CLI::App* expsum = app.add_subcommand(
        "expsum", "cubic exponential sum with ternary divisor coefficients over (N, N1]");
    expsum->add_option("--N", c.N, "lower limit (exclusive)");
    expsum->add_option("--N1", c.N1, "upper limit (inclusive, <= 2N)");
    expsum->add_option("--dyadic-lo", c.dyadic_lo, "scan start: N = 2^lo");
    expsum->add_option("--dyadic-hi", c.dyadic_hi, "scan end: N = 2^hi");
    add_common(expsum, false);

    CLI::App* gaps = app.add_subcommand("gaps", "zero-gap statistics on [t0, t1]");
    gaps->add_option("--t0", c.t0, "scan start")->required();
    gaps->add_option("--t1", c.t1, "scan end")->required();
    gaps->add_option("--step", c.step, "grid step (0 = 0.5/log(t1))");
    gaps->add_option("--alpha", c.alpha, "gap-moment exponent (default 2)");
    add_common(gaps, false);

    CLI::App* clt = app.add_subcommand(
        "clt", "normalized log|Z| sample on [T, 2T] with a normality statistic");
    clt->add_option("--T", c.T, "window start")->required();
    clt->add_option("--m", c.m, "sample size");
    clt->add_option("--seed", c.seed, "generator seed");
    add_common(clt, false);

    CLI::App* phasesum = app.add_subcommand(
        "phasesum", "phase-directed point sum over the solutions of theta(t) = -phi mod pi");
    phasesum->add_option("--T", c.T, "upper endpoint")->required();
    phasesum->add_option("--phi", c.phi, "phase direction")->required();
    add_common(phasesum, false);

    CLI::App* growth = app.add_subcommand(
        "growth", "normalized moment ratios R_k over dyadic T in [T0, T1]");
    growth->add_option("--T0", c.T0, "dyadic scan start")->required();
    growth->add_option("--T1", c.T1, "dyadic scan end")->required();
    growth->add_option("--k", c.k, "power (0 = all of 1..4)")->check(CLI::Range(0, 4));
    add_common(growth, false);

    for (CLI::App* sub : {moment, cubic, shift2, shift3, expsum})
        sub->add_option("--cache-dir", c.cache_dir, "divisor-table cache directory");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("zhardy");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        outcome.exit_code = 0;
        outcome.message = sub->help();
        return outcome;
    } catch (const CLI::ParseError& e) {
        outcome.exit_code = 1;
        outcome.message = std::string("zhardy: ") + e.what();
        return outcome;
    }

    c.command = app.get_subcommands().front()->get_name();
    if (std::string msg = detail::check_config(c); !msg.empty()) {
        outcome.exit_code = 1;
        outcome.message = "zhardy: " + msg;
    }
    return outcome;
}

}  // namespace zhardy::cli
