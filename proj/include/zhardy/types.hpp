#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zhardy {

inline constexpr const char* kVersion = "0.1.0";

// Method that produced a value; every computed quantity carries its provenance
// and an absolute error bound, so cross-method agreement is checkable:
// |value_a - value_b| <= err_a + err_b must hold for any two methods at the same t.
enum class Method : std::uint8_t { RS0, RS1, Dirichlet, Oracle, AFE };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::RS0: return "rs0";
        case Method::RS1: return "rs1";
        case Method::Dirichlet: return "dirichlet";
        case Method::Oracle: return "oracle";
        case Method::AFE: return "afe";
    }
    return "unknown";
}

// A real-valued evaluation of Z(t) (or of theta) with an absolute error bound.
struct ZValue {
    double value = 0.0;
    double err = 0.0;
    Method method = Method::Oracle;
};

// A complex evaluation (zeta on the critical line).
struct ZetaValue {
    std::complex<double> value{0.0, 0.0};
    double err = 0.0;
    Method method = Method::Dirichlet;
};

// theta(t) with an absolute bound on the truncation + rounding error.
struct PhaseValue {
    double value = 0.0;
    double err = 0.0;
};

// Thrown when an input would require more memory/work than the configured
// budget; carries the amount needed so callers can decide to retry.
class ResourceError : public std::runtime_error {
  public:
    ResourceError(const std::string& what, std::uint64_t required)
        : std::runtime_error(what), required_bytes(required) {}
    std::uint64_t required_bytes = 0;
};

}  // namespace zhardy
