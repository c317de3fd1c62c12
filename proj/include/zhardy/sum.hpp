#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

namespace zhardy {

// Neumaier's compensated summation: one running error term catches both
// "small added to big" and "big added to small" cases. Used in every main
// sum so rounding stays far below the truncation errors we report.
class NeumaierSum {
  public:
    void add(double x) noexcept {
        const double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    [[nodiscard]] double value() const noexcept { return s_ + c_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

class NeumaierSumC {
  public:
    void add(std::complex<double> z) noexcept {
        re_.add(z.real());
        im_.add(z.imag());
    }
    [[nodiscard]] std::complex<double> value() const noexcept {
        return {re_.value(), im_.value()};
    }

  private:
    NeumaierSum re_, im_;
};

// Out-of-line compensated reduction. Call this from translation units built
// with value-changing FP flags (vectorized cos): inlining NeumaierSum there
// would let the compiler cancel the compensation algebraically.
double neumaier_sum(const double* x, std::size_t n) noexcept;

}  // namespace zhardy
