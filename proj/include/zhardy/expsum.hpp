#pragma once

#include <complex>
#include <cstdint>

#include "zhardy/divisor.hpp"

namespace zhardy {

struct ExpSumResult {
    std::complex<double> value;
    std::uint64_t N0, N1;  // sum over N0 < n <= N1
    std::uint64_t terms;
    double normalized;  // |value| / N0^{2/3}, the growth diagnostic
};

// Compensated complex sum of d_3(n) e^{3 pi i n^{2/3}} over N < n <= N1
// with N1 <= 2N, exact integer coefficients from the k=3 table. Fixed
// ascending order, so results are bit-identical regardless of environment.
ExpSumResult exp_sum_d3(std::uint64_t N, std::uint64_t N1, const DivisorTable& table);

}  // namespace zhardy
