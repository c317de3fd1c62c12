#include "zhardy/expsum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zhardy/sum.hpp"
#include "zhardy/types.hpp"

namespace zhardy {

ExpSumResult exp_sum_d3(std::uint64_t N, std::uint64_t N1, const DivisorTable& table) {
    if (!(N >= 1 && N < N1 && N1 <= 2 * N))
        throw std::domain_error("exp_sum_d3: requires 1 <= N < N1 <= 2N");
    if (table.k != 3) throw std::domain_error("exp_sum_d3: needs a k=3 divisor table");
    if (table.limit < N1)
        throw ResourceError("exp_sum_d3: divisor table covers n <= " +
                                std::to_string(table.limit) + ", need N1 = " +
                                std::to_string(N1),
                            8 * (N1 + 1));

    NeumaierSumC sum;
    for (std::uint64_t n = N + 1; n <= N1; ++n) {
        const double cbrt = std::cbrt(static_cast<double>(n));
        const double phase = 3.0 * std::numbers::pi * cbrt * cbrt;
        const auto d3 = static_cast<double>(table.values[n]);
        sum.add({d3 * std::cos(phase), d3 * std::sin(phase)});
    }
    const std::complex<double> v = sum.value();
    return {v, N, N1, N1 - N, std::abs(v) / std::cbrt(static_cast<double>(N * N))};
}

}  // namespace zhardy
