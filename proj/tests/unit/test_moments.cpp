#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "zhardy/calibration.hpp"
#include "zhardy/divisor.hpp"
#include "zhardy/moments.hpp"
#include "zhardy/oscint.hpp"

using namespace zhardy;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("f_moment is the moment of the oscillatory integrator") {
    const MomentResult m = f_moment(100.0, 120.0, 2, false, 1e-8);
    const QuadratureResult q = integrate_zk(100.0, 120.0, 2, false, 1e-8);
    CHECK(m.value == q.value);
    CHECK(m.err == q.err);
    CHECK(m.k == 2);
    CHECK(m.converged);
    CHECK(m.value > 0.0);
}

TEST_CASE("prefix first moments accumulate segment by segment") {
    const std::vector<double> Ts{120.0, 140.0, 160.0};
    const std::vector<double> pre = f1_prefix(100.0, Ts, 1e-9);
    REQUIRE(pre.size() == 3);
    // Against independent whole-range integrals (different panelization).
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        const QuadratureResult whole = integrate_zk(100.0, Ts[i], 1, false, 1e-9);
        CHECK(std::abs(pre[i] - whole.value) < 1e-6);
    }
    CHECK_THROWS_AS(f1_prefix(100.0, std::vector<double>{120.0, 110.0}, 1e-9),
                    std::domain_error);
}

TEST_CASE("sign partition: structure and identities") {
    const double T = 1000.0, H = 100.0;
    const SignPartition sp = sign_partition(T, H);
    REQUIRE(sp.converged);
    REQUIRE(sp.intervals.size() > 50);

    // Pieces tile [T, T+H] and alternate sign (all zeros are simple).
    CHECK(sp.intervals.front().lo == T);
    CHECK(sp.intervals.back().hi == T + H);
    for (std::size_t i = 0; i + 1 < sp.intervals.size(); ++i) {
        REQUIRE(sp.intervals[i].hi == sp.intervals[i + 1].lo);
        CHECK(sp.intervals[i].sign == -sp.intervals[i + 1].sign);
    }
    // Each piece's integral carries the piece's sign.
    for (const auto& p : sp.intervals) {
        REQUIRE((p.sign == 1 || p.sign == -1));
        CHECK(p.integral * p.sign >= -1e-6);
    }

    // Measures split the window; integrals split the signed integral.
    CHECK(sp.Kplus > 0.0);
    CHECK(sp.Kminus > 0.0);
    CHECK(sp.Kplus + sp.Kminus == doctest::Approx(H).epsilon(1e-12));
    CHECK(sp.Iplus > 0.0);
    CHECK(sp.Iminus < 0.0);
    CHECK(std::abs(sp.Iplus + sp.Iminus - sp.int_z) <= sp.err + 1e-6);
    CHECK(std::abs(sp.Iplus - sp.Iminus - sp.int_abs_z) < 1e-9);
    CHECK(sp.int_abs_z >= std::abs(sp.int_z));
    // Neither sign dominates a long window too badly.
    CHECK(sp.Kplus / H > 0.2);
    CHECK(sp.Kplus / H < 0.8);
}

TEST_CASE("explicit cubic formula: window bounds and tiny-T closed forms") {
    const DivisorTable d3 = sieve_dk(3, 100);
    // T = 1: the window (1/2pi)^{3/2}..(1/pi)^{3/2} contains no integer.
    const ExplicitFormulaResult empty = cubic_rhs(1.0, d3);
    CHECK(empty.empty);
    CHECK(empty.value == 0.0);
    CHECK(empty.n_lo > empty.n_hi);

    // T = 4: exactly n = 1 contributes: 2 pi sqrt(2/3) cos(3 pi + pi/8).
    const ExplicitFormulaResult one = cubic_rhs(4.0, d3);
    CHECK(!one.empty);
    CHECK(one.n_lo == 1);
    CHECK(one.n_hi == 1);
    const double expect =
        kTwoPi * std::sqrt(2.0 / 3.0) * std::cos(3.0 * std::numbers::pi + 0.125 * std::numbers::pi);
    CHECK(one.value == doctest::Approx(expect).epsilon(1e-12));
    CHECK(expect < 0.0);

    CHECK_THROWS_AS(cubic_rhs(500.0, d3), ResourceError);  // table far too short
    const DivisorTable d2 = sieve_dk(2, 100);
    CHECK_THROWS_AS(cubic_rhs(4.0, d2), std::domain_error);
}

TEST_CASE("signed cubic moment vs the explicit formula at T = 500") {
    const double T = 500.0;
    const DivisorTable d3 = sieve_dk(3, 2100);
    const ExplicitFormulaResult rhs = cubic_rhs(T, d3);
    REQUIRE(!rhs.empty);
    const MomentResult lhs = f_moment(T, 2.0 * T, 3, false, 0.0);
    REQUIRE(lhs.converged);
    CHECK(std::abs(lhs.value - rhs.value) <= cal::kCubicCoef * std::pow(T, 0.75));
}

TEST_CASE("shifted second moment: the log reading beats the as-printed one") {
    const double T = 1000.0, alpha = 1.0;
    const HallResult log_v = hall_shifted(T, alpha, HallVariant::LogVariant);
    const HallResult printed = hall_shifted(T, alpha, HallVariant::AsPrinted);
    REQUIRE(log_v.converged);
    CHECK(log_v.U == doctest::Approx(alpha / std::log(T)).epsilon(1e-14));
    CHECK(log_v.lhs == printed.lhs);  // same quadrature on both readings
    CHECK(std::abs(log_v.residual) < std::abs(printed.residual));
    CHECK(std::abs(log_v.residual) <= 5.0 * log_v.allowance);
    // The two readings differ by exactly (2pi - log 2pi) T cos(alpha/2).
    const double gap = (kTwoPi - std::log(kTwoPi)) * T * std::cos(0.5 * alpha);
    CHECK(printed.main - log_v.main == doctest::Approx(-gap).epsilon(1e-10));
    CHECK_THROWS_AS(hall_shifted(T, 0.0, HallVariant::LogVariant), std::domain_error);
    CHECK_THROWS_AS(hall_shifted(5.0, 1.0, HallVariant::LogVariant), std::domain_error);
}

TEST_CASE("shifted cubic: window candidates and the zero-shift limit") {
    const double T = 500.0;
    const DivisorTable d2 = sieve_dk(2, 2100);
    const DivisorTable d3 = sieve_dk(3, 2100);

    // The window as printed descends, so it holds no integers.
    const ExplicitFormulaResult printed = shifted_cubic_rhs(T, 1.0, Shift3Range::AsPrinted, d2);
    CHECK(printed.empty);
    CHECK(printed.value == 0.0);

    // At U = 0 the ascending window reproduces the unshifted explicit formula.
    const ExplicitFormulaResult asc0 = shifted_cubic_rhs(T, 0.0, Shift3Range::Ascending, d2);
    const ExplicitFormulaResult cubic = cubic_rhs(T, d3);
    REQUIRE(!asc0.empty);
    CHECK(asc0.n_lo == cubic.n_lo);
    CHECK(asc0.n_hi == cubic.n_hi);
    CHECK(asc0.value == doctest::Approx(cubic.value).epsilon(1e-9));

    // The half-shifted window covers the integrand's own frequency range.
    const ExplicitFormulaResult half = shifted_cubic_rhs(T, 1.0, Shift3Range::HalfShifted, d2);
    REQUIRE(!half.empty);
    CHECK(half.n_lo < asc0.n_lo);

    CHECK_THROWS_AS(shifted_cubic_rhs(T, -1.0, Shift3Range::Ascending, d2), std::domain_error);
    CHECK_THROWS_AS(shifted_cubic_rhs(T, 30.0, Shift3Range::Ascending, d2), std::domain_error);
    CHECK_THROWS_AS(shifted_cubic_rhs(T, 1.0, Shift3Range::Ascending, d3), std::domain_error);
}

TEST_CASE("shifted cubic quadrature side stays within the residual budget") {
    const double T = 500.0, U = 1.0;
    const DivisorTable d2 = sieve_dk(2, 2100);
    const MomentResult lhs = shifted_cubic_lhs(T, U);
    REQUIRE(lhs.converged);
    CHECK(lhs.T0 == 0.5 * T);
    CHECK(lhs.T1 == T);
    // At least one non-empty window lands within the explicit-formula budget.
    const ExplicitFormulaResult asc = shifted_cubic_rhs(T, U, Shift3Range::Ascending, d2);
    const ExplicitFormulaResult half = shifted_cubic_rhs(T, U, Shift3Range::HalfShifted, d2);
    const double best = std::min(std::abs(lhs.value - asc.value),
                                 std::abs(lhs.value - half.value));
    CHECK(best <= 5.0 * std::pow(T, 0.75));
}

TEST_CASE("growth diagnostics: shared evaluations and sane ratios") {
    const std::vector<double> Ts{1000.0, 2000.0, 4000.0};
    const std::vector<GrowthRow> rows = growth_diagnostics({1, 2, 3}, Ts);
    REQUIRE(rows.size() == 9);
    for (const auto& r : rows) {
        CHECK(r.integral > 0.0);
        CHECK(r.ratio > 0.0);
    }
    // Rows at the same T share one fixed-panel pass over [T, 2T].
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        const double T = Ts[i];
        std::size_t shared = 0;
        for (const auto& r : rows)
            if (r.T == T) {
                if (shared == 0) shared = r.evals;
                CHECK(r.evals == shared);
            }
        // ratio = integral / (T log^{k^2/4} T).
        for (const auto& r : rows)
            if (r.T == T)
                CHECK(r.ratio == doctest::Approx(r.integral /
                                                 (T * std::pow(std::log(T), 0.25 * r.k * r.k)))
                                     .epsilon(1e-12));
    }
    // Within this modest range the normalized ratios stay in a narrow band.
    for (int k : {1, 2, 3}) {
        double lo = 1e300, hi = 0.0;
        for (const auto& r : rows)
            if (r.k == k) {
                lo = std::min(lo, r.ratio);
                hi = std::max(hi, r.ratio);
            }
        CHECK(hi / lo < 4.0);
    }
    CHECK_THROWS_AS(growth_diagnostics({5}, Ts), std::domain_error);
    CHECK_THROWS_AS(growth_diagnostics({1}, std::vector<double>{5.0}), std::domain_error);
    // The single-k overload matches the list overload.
    const std::vector<GrowthRow> single = growth_diagnostics(2, Ts);
    REQUIRE(single.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(single[i].k == 2);
        CHECK(single[i].T == Ts[i]);
    }
}

TEST_CASE("scaled log|Z| samples: determinism and rough normality") {
    const CltSample a = clt_sample(1000.0, 1000, 42, 1);
    const CltSample b = clt_sample(1000.0, 1000, 42, 8);
    REQUIRE(a.values.size() == 1000);
    CHECK(a.ks_stat == b.ks_stat);
    for (std::size_t i = 0; i < a.values.size(); ++i) REQUIRE(a.values[i] == b.values[i]);
    CHECK(a.rejections == b.rejections);

    const CltSample c = clt_sample(1000.0, 1000, 43);
    CHECK(c.values[0] != a.values[0]);  // seed matters

    CHECK(a.ks_stat > 0.0);
    CHECK(a.ks_stat < 0.5);  // the law is near-normal even this low
    CHECK_THROWS_AS(clt_sample(100.0, 1000, 1), std::domain_error);
    CHECK_THROWS_AS(clt_sample(1000.0, 10, 1), std::domain_error);
}

TEST_CASE("phase-ray point sums") {
    const double T = 20000.0;
    // phi = 0: summands are real Z values; the ray sum is real to rounding.
    const PhaseSumResult r0 = phase_point_sum(T, 0.0);
    CHECK(r0.points > 1000);
    CHECK(r0.realness_defect < 1e-9);
    CHECK(r0.main.imag() == 0.0);
    CHECK(r0.main.real() ==
          doctest::Approx(2.0 * T / kTwoPi * std::log(T / (kTwoPi * std::numbers::e)))
              .epsilon(1e-13));
    CHECK(r0.residual_rel < 0.35);

    // phi = pi/4: the ray picks up both components; the main term rotates.
    const PhaseSumResult r1 = phase_point_sum(T, 0.25 * std::numbers::pi);
    const double c = std::cos(0.25 * std::numbers::pi);
    CHECK(std::abs(r1.main - 2.0 * c * std::polar(1.0, 0.25 * std::numbers::pi) *
                                (T / kTwoPi) * std::log(T / (kTwoPi * std::numbers::e))) <
          1e-8 * std::abs(r1.main));
    CHECK(r1.residual_rel < 0.35);
    // Fewer ray points than zeros of the full period.
    CHECK(std::abs(static_cast<double>(r1.points) - static_cast<double>(r0.points)) <= 2.0);

    CHECK_THROWS_AS(phase_point_sum(10.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(phase_point_sum(T, -0.1), std::domain_error);
    CHECK_THROWS_AS(phase_point_sum(T, 3.2), std::domain_error);
}
