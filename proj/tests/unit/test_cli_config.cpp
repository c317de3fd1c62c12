#include <string>
#include <vector>

#include <doctest.h>

#include "../../src/cli/config.hpp"

using zhardy::cli::ParseOutcome;
using zhardy::cli::parse_config;

namespace {
ParseOutcome parse(std::initializer_list<std::string> args) {
    return parse_config(std::vector<std::string>(args));
}
}  // namespace

TEST_CASE("evaluation request round-trips") {
    const ParseOutcome o = parse({"eval", "--t", "1000.5"});
    REQUIRE(o.exit_code < 0);
    CHECK(o.config.command == "eval");
    CHECK(o.config.t == 1000.5);
    CHECK(o.config.threads == 0);
    CHECK(o.config.format == "csv");
    CHECK(o.config.out.empty());
}

TEST_CASE("zero scan with an output file") {
    const ParseOutcome o =
        parse({"zeros", "--t0", "10", "--t1", "1000", "--out", "zeros.csv", "--oracle-refine"});
    REQUIRE(o.exit_code < 0);
    CHECK(o.config.command == "zeros");
    CHECK(o.config.t0 == 10.0);
    CHECK(o.config.t1 == 1000.0);
    CHECK(o.config.out == "zeros.csv");
    CHECK(o.config.step == 0.0);
    CHECK(o.config.oracle_refine);
}

TEST_CASE("moment with power and absolute flag") {
    const ParseOutcome o =
        parse({"moment", "--T0", "1000", "--T1", "2000", "--k", "2", "--abs", "--tol", "1e-6"});
    REQUIRE(o.exit_code < 0);
    CHECK(o.config.command == "moment");
    CHECK(o.config.T0 == 1000.0);
    CHECK(o.config.T1 == 2000.0);
    CHECK(o.config.k == 2);
    CHECK(o.config.absolute);
    CHECK(o.config.tol == 1e-6);
}

TEST_CASE("defaults survive parsing") {
    const ParseOutcome clt = parse({"clt", "--T", "1e6"});
    REQUIRE(clt.exit_code < 0);
    CHECK(clt.config.m == 10000);
    CHECK(clt.config.seed == 1);
    const ParseOutcome growth = parse({"growth", "--T0", "1000", "--T1", "8000"});
    REQUIRE(growth.exit_code < 0);
    CHECK(growth.config.k == 0);  // 0 = all powers
    const ParseOutcome s3 = parse({"shift3", "--T", "500", "--U", "1"});
    REQUIRE(s3.exit_code < 0);
    CHECK(s3.config.range == "all");
}

TEST_CASE("help goes to stdout with exit 0") {
    const ParseOutcome top = parse({"--help"});
    CHECK(top.exit_code == 0);
    CHECK(top.message.find("zhardy") != std::string::npos);
    const ParseOutcome sub = parse({"moment", "--help"});
    CHECK(sub.exit_code == 0);
    CHECK(sub.message.find("--T0") != std::string::npos);
    CHECK(sub.message.find("--abs") != std::string::npos);
}

TEST_CASE("usage errors exit 1 with a message") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},                                     // no subcommand
             {"frobnicate", "--T", "10"},            // unknown subcommand
             {"eval"},                               // missing required --t
             {"eval", "--t", "ten"},                 // non-numeric
             {"eval", "--t", "10", "--format", "xml"},
             {"eval", "--t", "10", "--threads", "-2"},
             {"moment", "--T0", "1", "--T1", "2", "--k", "7"},
             {"moment", "--T0", "1", "--T1", "2", "--k", "2", "--tol", "-1"},
             {"eval", "--t", "10", "--cache-dir", "x"},  // cache only where tables are used
         }) {
        const ParseOutcome o = parse_config(args);
        CHECK(o.exit_code == 1);
        CHECK(!o.message.empty());
    }
}

TEST_CASE("operation preconditions are enforced at parse time") {
    struct Case {
        std::vector<std::string> args;
        std::string needle;  // flag the message must name
    };
    for (const auto& c : std::vector<Case>{
             {{"zeros", "--t0", "5", "--t1", "100"}, "--t0"},
             {{"zeros", "--t0", "10", "--t1", "5e6"}, "--t1"},
             {{"zeros", "--t0", "10", "--t1", "1000", "--step", "0.5"}, "--step"},
             {{"moment", "--T0", "100", "--T1", "100", "--k", "2"}, "--T0"},
             {{"signdist", "--T", "3999990", "--H", "100"}, "--H"},
             {{"signdist", "--T", "5", "--H", "10"}, "--T"},
             {{"cubic", "--T", "0"}, "--T"},
             {{"shift2", "--T", "1000", "--alpha", "0"}, "--alpha"},
             {{"shift3", "--T", "100", "--U", "11"}, "--U"},
             {{"expsum", "--N", "1000"}, "--N"},
             {{"expsum", "--N", "1000", "--N1", "2001"}, "--N1"},
             {{"expsum", "--N", "1000", "--N1", "2000", "--dyadic-lo", "3", "--dyadic-hi", "4"},
              "--N"},
             {{"expsum", "--dyadic-lo", "5", "--dyadic-hi", "26"}, "--dyadic-hi"},
             {{"expsum", "--dyadic-lo", "7", "--dyadic-hi", "5"}, "--dyadic-lo"},
             {{"gaps", "--t0", "100", "--t1", "200", "--alpha", "-1"}, "--alpha"},
             {{"clt", "--T", "100"}, "--T"},
             {{"clt", "--T", "1e4", "--m", "10"}, "--m"},
             {{"phasesum", "--T", "1000", "--phi", "3.15"}, "--phi"},
             {{"phasesum", "--T", "10", "--phi", "0"}, "--T"},
             {{"growth", "--T0", "5", "--T1", "100"}, "--T0"},
         }) {
        const ParseOutcome o = parse_config(c.args);
        CHECK(o.exit_code == 1);
        CHECK(o.message.find(c.needle) != std::string::npos);
        CHECK(o.message.find("requires") != std::string::npos);
    }
}

TEST_CASE("valid boundary values are accepted") {
    CHECK(parse({"zeros", "--t0", "10", "--t1", "4e6"}).exit_code < 0);
    CHECK(parse({"expsum", "--N", "1000", "--N1", "2000"}).exit_code < 0);
    CHECK(parse({"expsum", "--dyadic-lo", "0", "--dyadic-hi", "25"}).exit_code < 0);
    CHECK(parse({"shift3", "--T", "100", "--U", "10"}).exit_code < 0);
    CHECK(parse({"phasesum", "--T", "20", "--phi", "0"}).exit_code < 0);
    CHECK(parse({"gaps", "--t0", "100", "--t1", "200", "--alpha", "0"}).exit_code < 0);
    const ParseOutcome cached =
        parse({"cubic", "--T", "500", "--cache-dir", "/tmp/zh", "--format", "json"});
    REQUIRE(cached.exit_code < 0);
    CHECK(cached.config.cache_dir == "/tmp/zh");
    CHECK(cached.config.format == "json");
}
