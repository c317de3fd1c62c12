#include "zhardy/zeval.hpp"

#include <cmath>
#include <stdexcept>

#include "zhardy/oracle.hpp"
#include "zhardy/rs.hpp"

namespace zhardy {

ZValue z_eval(double t) {
    if (!std::isfinite(t)) throw std::domain_error("z_eval: t must be finite");
    const double a = std::abs(t);
    if (a >= 10.0 && a <= 4.0e6) return z_rs(a, 1);
    return z_oracle(a, 16);
}

}  // namespace zhardy
