// Thin Python layer over the C++ core. Big integers cross as decimal strings.

#include "circdet/coeff_engine.hpp"
#include "circdet/expansion.hpp"
#include "circdet/symmetry.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;
using namespace circdet;

namespace {

py::int_ to_py(const BigInt& v) {
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

IndexSet make_set(const std::vector<int>& indices) {
    if (indices.empty()) throw std::invalid_argument("index list is empty");
    return IndexSet(static_cast<int>(indices.size()), indices);
}

}  // namespace

PYBIND11_MODULE(_circdet, m) {
    m.doc() = "Exact coefficients of the circulant determinant expansion";

    m.def(
        "coefficient",
        [](const std::vector<int>& indices, bool zero_criterion, bool reduce) {
            return to_py(coefficient(make_set(indices), {zero_criterion, reduce}));
        },
        py::arg("indices"), py::kw_only(), py::arg("zero_criterion") = false, py::arg("reduce") = true,
        "Coefficient of x_{a_0} ... x_{a_{N-1}}; N is the list length.");

    m.def(
        "coefficient_detailed",
        [](const std::vector<int>& indices, bool zero_criterion, bool reduce) {
            CoeffResult r = coefficient_detailed(make_set(indices), {zero_criterion, reduce});
            py::dict d;
            d["value"] = to_py(r.value);
            d["path"] = to_string(r.path);
            d["evaluated"] = r.evaluated.indices();
            d["sign"] = r.sign;
            return d;
        },
        py::arg("indices"), py::kw_only(), py::arg("zero_criterion") = false, py::arg("reduce") = true);

    m.def("is_condition8", [](const std::vector<int>& indices) { return satisfies_condition_8(make_set(indices)); },
          py::arg("indices"), "True when the index sum vanishes mod N.");

    m.def("zero_by_family", [](const std::vector<int>& indices) { return zero_by_corollary6(make_set(indices)); },
          py::arg("indices"), "True when the set belongs to the known family of vanishing coefficients.");

    m.def(
        "reduce_representative",
        [](const std::vector<int>& indices) {
            Reduction r = reduce_representative(make_set(indices));
            return py::make_tuple(r.representative.indices(), r.sign);
        },
        py::arg("indices"), "(representative, sign) with C(input) = sign * C(representative).");

    m.def(
        "expand",
        [](int N, const std::string& strategy, int jobs, bool include_zeros) {
            ExpansionPolynomial poly;
            {
                py::gil_scoped_release release;
                poly = expand(N, parse_strategy(strategy), jobs);
            }
            py::dict out;
            for (const auto& [M, value] : poly.terms) {
                if (value == 0 && !include_zeros) continue;
                out[py::tuple(py::cast(M.counts()))] = to_py(value);
            }
            return out;
        },
        py::arg("N"), py::kw_only(), py::arg("strategy") = "reduced", py::arg("jobs") = 1,
        py::arg("include_zeros") = false, "Exponent tuple -> coefficient for det[x_0, ..., x_{N-1}].");

    m.def(
        "classify_counts",
        [](int N, int jobs) {
            Classification c;
            {
                py::gil_scoped_release release;
                c = classify(N, jobs);
            }
            py::dict d;
            d["N"] = N;
            d["additive"] = c.additive.size();
            d["super"] = c.super.size();
            d["F"] = to_py(count_solutions_F(N));
            return d;
        },
        py::arg("N"), py::kw_only(), py::arg("jobs") = 1, "Number of additive and super multiplets at size N.");
}
