#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "zhardy/oracle.hpp"
#include "zhardy/zeros.hpp"

using namespace zhardy;

namespace {
// First three ordinates, good to ~1e-13 (independent published values).
constexpr double kGamma1 = 14.134725141734694;
constexpr double kGamma2 = 21.022039638771554;
constexpr double kGamma3 = 25.010857580145688;
}  // namespace

TEST_CASE("the first three zeros land where they should") {
    const ZeroTable t = scan_zeros(10.0, 26.0);
    REQUIRE(t.records.size() == 3);
    CHECK(t.records[0].index == 1);
    CHECK(t.records[1].index == 2);
    CHECK(t.records[2].index == 3);
    CHECK(std::abs(t.records[0].gamma - kGamma1) <= t.records[0].uncertainty);
    CHECK(std::abs(t.records[1].gamma - kGamma2) <= t.records[1].uncertainty);
    CHECK(std::abs(t.records[2].gamma - kGamma3) <= t.records[2].uncertainty);
    for (const auto& r : t.records) CHECK(r.uncertainty >= 1e-9);
}

TEST_CASE("oracle refinement pins the ordinates to nanometers") {
    const ZeroTable t = scan_zeros(10.0, 26.0, 0.0, 0, true);
    REQUIRE(t.records.size() == 3);
    CHECK(t.oracle_refined);
    CHECK(std::abs(t.records[0].gamma - kGamma1) < 1e-8);
    CHECK(std::abs(t.records[1].gamma - kGamma2) < 1e-8);
    CHECK(std::abs(t.records[2].gamma - kGamma3) < 1e-8);
    for (const auto& r : t.records) {
        CHECK(r.uncertainty == 1e-9);
        // The refined ordinate really is a zero of the underlying function.
        CHECK(std::abs(z_oracle(r.gamma, 12).value) < 1e-6);
    }
}

TEST_CASE("census over [10, 200] alternates signs and matches the count formula") {
    const ZeroTable t = scan_zeros(10.0, 200.0, 0.0, 0, true);
    // Riemann-von Mangoldt: N(200) ~ n_rvm(200) + O(log 200).
    const double pred = n_rvm(200.0);
    CHECK(std::abs(static_cast<double>(t.records.size()) - pred) <= 2.0 * std::log(200.0));
    // Strictly increasing, contiguous indices, honest refinement.
    for (std::size_t i = 0; i + 1 < t.records.size(); ++i) {
        REQUIRE(t.records[i].gamma < t.records[i + 1].gamma);
        REQUIRE(t.records[i + 1].index == t.records[i].index + 1);
    }
    // Z changes sign across each refined ordinate (simple zeros).
    for (const auto& r : t.records) {
        const double w = 1e-5;
        const double lo = z_oracle(r.gamma - w, 12).value;
        const double hi = z_oracle(r.gamma + w, 12).value;
        REQUIRE(lo * hi < 0.0);
    }
}

TEST_CASE("count formula fixed points") {
    const double two_pi = 2.0 * std::numbers::pi;
    CHECK(n_rvm(two_pi) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(n_rvm(two_pi * std::numbers::e) == doctest::Approx(0.0).epsilon(2e-14));
    CHECK(n_rvm(1000.0) == doctest::Approx(647.7412353129674).epsilon(1e-12));
    CHECK(n_rvm(1000.0) < 649.0);  // true count to 1000 is 649
    CHECK(n_rvm(1000.0) > 649.0 - 2.0 * std::log(1000.0));
}

TEST_CASE("explicit steps: valid ones agree, coarse ones are refused") {
    const double bound = 0.5 / std::log(100.0);
    const ZeroTable fine = scan_zeros(50.0, 100.0, 0.5 * bound);
    const ZeroTable def = scan_zeros(50.0, 100.0);
    REQUIRE(fine.records.size() == def.records.size());
    for (std::size_t i = 0; i < fine.records.size(); ++i)
        CHECK(std::abs(fine.records[i].gamma - def.records[i].gamma) < 1e-7);
    CHECK_THROWS_AS(scan_zeros(50.0, 100.0, 2.0 * bound), std::domain_error);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(scan_zeros(5.0, 100.0), std::domain_error);
    CHECK_THROWS_AS(scan_zeros(100.0, 100.0), std::domain_error);
    CHECK_THROWS_AS(scan_zeros(200.0, 100.0), std::domain_error);
    CHECK_THROWS_AS(scan_zeros(10.0, 5.0e6), std::domain_error);
}

TEST_CASE("gap statistics") {
    const ZeroTable t = scan_zeros(100.0, 300.0);
    REQUIRE(t.records.size() > 50);
    const GapStats count = gap_moment(t, 0.0);
    CHECK(count.count == t.records.size() - 1);
    CHECK(count.value == doctest::Approx(static_cast<double>(count.count)).epsilon(1e-12));
    const GapStats mean = gap_moment(t, 1.0);
    CHECK(mean.value ==
          doctest::Approx(t.records.back().gamma - t.records.front().gamma).epsilon(1e-9));
    const GapStats square = gap_moment(t, 2.0);
    // Cauchy-Schwarz: (sum g)^2 <= count * sum g^2.
    CHECK(mean.value * mean.value <= static_cast<double>(count.count) * square.value);
    CHECK_THROWS_AS(gap_moment(t, -1.0), std::domain_error);

    const std::vector<double> deltas = delta_series(t);
    REQUIRE(deltas.size() == count.count);
    double s = 0.0;
    for (double d : deltas) {
        CHECK(d > 0.0);
        s += d;
    }
    // Normalized gaps average to ~1 (the count formula's local density).
    CHECK(s / static_cast<double>(deltas.size()) == doctest::Approx(1.0).epsilon(0.08));
}

TEST_CASE("normalized gap mean tightens over a long range") {
    const ZeroTable t = scan_zeros(10000.0, 11000.0);
    const std::vector<double> deltas = delta_series(t);
    REQUIRE(deltas.size() > 1000);
    double s = 0.0;
    for (double d : deltas) s += d;
    CHECK(s / static_cast<double>(deltas.size()) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("CSV output: header, digits, and the sidecar") {
    const ZeroTable t = scan_zeros(10.0, 30.0, 0.0, 0, true);
    std::ostringstream os;
    write_zero_csv(t, os);
    const std::string text = os.str();
    CHECK(text.rfind("index,gamma,uncertainty\n", 0) == 0);
    CHECK(text.find("14.1347251417") != std::string::npos);
    CHECK(text.find("\r") == std::string::npos);
    // One line per record plus the header.
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == t.records.size() + 1);
}
