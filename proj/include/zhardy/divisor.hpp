#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "zhardy/types.hpp"

namespace zhardy {

// Exact table of the generalized divisor function d_k(n) = #{ordered k-tuples
// with product n}, 1-based. Immutable after construction; freely shareable
// across threads.
struct DivisorTable {
    unsigned k = 0;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> values;  // values[n] = d_k(n) for 1 <= n <= limit

    // Range-checked lookup; n past the table raises a resource error naming
    // the bytes a covering table would need.
    [[nodiscard]] std::uint64_t at(std::uint64_t n) const;
};

// Build d_k up to N by k-1 divisor-convolution passes, O(N log N) each.
DivisorTable sieve_dk(unsigned k, std::uint64_t N);

// Versioned binary cache: magic "DKT1", then little-endian u32 k, u64 N,
// then N u64 values. Cache presence changes wall time only, never values.
void save_dk(const DivisorTable& table, const std::filesystem::path& file);
std::optional<DivisorTable> load_dk(const std::filesystem::path& file);

// Load <dir>/d<k>.dkt when it covers N (trimmed to N), else sieve and
// refresh the cache file. Empty dir skips persistence entirely.
DivisorTable dk_cached(unsigned k, std::uint64_t N, const std::filesystem::path& dir);

// Smooth cutoff rho with rho(x) + rho(1/x) = 1: value 1 on [0, 1/b], 0 on
// [b, inf), and (1 - sin(pi*u/2))/2 with u = log(x)/log(b) between.
struct TestFunction {
    double b = 2.0;
};
double rho_eval(double x, const TestFunction& f = {});

// h(n,U) = n^{-iU} * sum_{delta | n} d(delta) delta^{iU}; h(n,0) = d_3(n)
// and |h(n,U)| <= d_3(n). Needs a k=2 table covering n for the d(delta).
struct ShiftWeight {
    std::uint64_t n;
    double U;
    std::complex<double> value;
};
ShiftWeight shift_weight(std::uint64_t n, double U, const DivisorTable& d2);

}  // namespace zhardy
