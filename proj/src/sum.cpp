#include "zhardy/sum.hpp"

namespace zhardy {

double neumaier_sum(const double* x, std::size_t n) noexcept {
    NeumaierSum s;
    for (std::size_t i = 0; i < n; ++i) s.add(x[i]);
    return s.value();
}

}  // namespace zhardy
