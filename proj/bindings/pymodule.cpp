#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "zhardy/moments.hpp"
#include "zhardy/oracle.hpp"
#include "zhardy/report.hpp"
#include "zhardy/rs.hpp"
#include "zhardy/theta.hpp"
#include "zhardy/types.hpp"
#include "zhardy/zeros.hpp"
#include "zhardy/zeval.hpp"

namespace py = pybind11;
using namespace zhardy;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hardy Z-function laboratory: evaluators, zero scans, moment experiments";
    m.attr("__version__") = kVersion;

    py::class_<ZValue>(m, "ZValue")
        .def_readonly("value", &ZValue::value)
        .def_readonly("err", &ZValue::err)
        .def_property_readonly(
            "method", [](const ZValue& z) { return std::string(method_name(z.method)); })
        .def("__repr__", [](const ZValue& z) {
            return "ZValue(value=" + fmt_g15(z.value) + ", err=" + fmt_g15(z.err) +
                   ", method=" + method_name(z.method) + ")";
        });

    m.def("z", &z_eval, py::arg("t"), "Z(t) via the fastest evaluator valid at t");
    m.def("z_rs", &z_rs, py::arg("t"), py::arg("order") = 1,
          "Riemann-Siegel evaluation, order 0 or 1, for 10 <= t <= 4e6");
    m.def("z_oracle", &z_oracle, py::arg("t"), py::arg("digits") = 16,
          "multiple-precision Euler-Maclaurin reference value");
    m.def(
        "theta", [](double t) { const PhaseValue p = theta(t); return py::make_tuple(p.value, p.err); },
        py::arg("t"), "phase theta(t) and its truncation error, |t| >= 2");
    m.def("n_rvm", &n_rvm, py::arg("T"), "Riemann-von Mangoldt zero-count main term");

    m.def(
        "zeros",
        [](double t0, double t1, double step, int threads, bool oracle_refine) {
            const ZeroTable tab = scan_zeros(t0, t1, step, threads, oracle_refine);
            py::list out;
            for (const ZeroRecord& r : tab.records)
                out.append(py::make_tuple(r.index, r.gamma, r.uncertainty));
            return out;
        },
        py::arg("t0"), py::arg("t1"), py::arg("step") = 0.0, py::arg("threads") = 0,
        py::arg("oracle_refine") = false,
        "scan [t0, t1] for zeros; returns (index, gamma, uncertainty) tuples");

    m.def(
        "moment",
        [](double T0, double T1, int k, bool absolute, double tol, int threads) {
            const MomentResult r = f_moment(T0, T1, k, absolute, tol, threads);
            py::dict d;
            d["value"] = r.value;
            d["err"] = r.err;
            d["converged"] = r.converged;
            d["evals"] = r.evals;
            return d;
        },
        py::arg("T0"), py::arg("T1"), py::arg("k"), py::arg("absolute") = false,
        py::arg("tol") = 0.0, py::arg("threads") = 0,
        "integral of Z^k (or |Z|^k) over [T0, T1]");

    m.def(
        "sign_partition",
        [](double T, double H, int threads) {
            const SignPartition sp = sign_partition(T, H, threads);
            py::dict d;
            d["K_plus"] = sp.Kplus;
            d["K_minus"] = sp.Kminus;
            d["I_plus"] = sp.Iplus;
            d["I_minus"] = sp.Iminus;
            d["int_Z"] = sp.int_z;
            d["int_absZ"] = sp.int_abs_z;
            d["pieces"] = sp.intervals.size();
            d["converged"] = sp.converged;
            return d;
        },
        py::arg("T"), py::arg("H"), py::arg("threads") = 0,
        "sign-split occupation times and integrals of Z on [T, T+H]");

    m.def(
        "clt_ks",
        [](double T, std::uint64_t m_, std::uint64_t seed, int threads) {
            return clt_sample(T, m_, seed, threads).ks_stat;
        },
        py::arg("T"), py::arg("m") = 10000, py::arg("seed") = 1, py::arg("threads") = 0,
        "Kolmogorov-Smirnov distance of normalized log|Z| samples to the standard normal");

    m.def(
        "growth",
        [](int k, const std::vector<double>& T_list, int threads) {
            py::list out;
            for (const GrowthRow& row : growth_diagnostics(k, T_list, threads))
                out.append(py::make_tuple(row.T, row.ratio));
            return out;
        },
        py::arg("k"), py::arg("T_list"), py::arg("threads") = 0,
        "normalized moment ratios R_k(T) for each T");
}
