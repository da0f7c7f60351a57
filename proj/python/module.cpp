#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "etaforge/kernel10.hpp"
#include "etaforge/numeric.hpp"
#include "etaforge/qseries.hpp"
#include "etaforge/search.hpp"
#include "etaforge/verify.hpp"

namespace py = pybind11;

namespace {

using namespace etaforge;

std::pair<std::string, std::vector<std::string>> expand(std::array<long, 4> e, long terms) {
    PuiseuxSeries s = eta_exponent_series(EtaExponents{e[0], e[1], e[2], e[3]}, terms);
    std::vector<std::string> coeffs;
    coeffs.reserve(s.coefficients().size());
    for (const Rat& c : s.coefficients()) coeffs.push_back(c.get_str());
    return {s.offset().get_str(), std::move(coeffs)};
}

std::vector<std::string> search(long e_max, long b, long terms, int jobs) {
    std::vector<std::string> out;
    for (const SearchHit& hit : search_level10(e_max, Int(b), terms, jobs))
        out.push_back(search_hit_to_json(hit));
    return out;
}

std::vector<std::array<long, 4>> scan(long range, int jobs) {
    std::vector<std::array<long, 4>> out;
    for (const ParamExponents& a : scan_a(range, jobs)) out.push_back({a[0], a[1], a[2], a[3]});
    return out;
}

std::string integrate_k(long a1, long a2, long a3) {
    ParamExponents a{-(a1 + a2 + a3), a1, a2, a3};
    return certificate_to_json(decide_rationality(a, true));
}

std::string suite(const std::string& name, long terms, int jobs) {
    return suite_report_to_json(name, run_suite(name, terms, jobs));
}

std::string eval_special(const std::string& what, long prec) {
    return numeric_report_to_json(evaluate_special(what, prec));
}

std::pair<std::string, std::string> row_value(const std::string& label, long prec) {
    std::pair<BigFloat, BigFloat> both = ramanujan_fine_value(label, prec);
    return {both.first.to_string(40), both.second.to_string(40)};
}

} // namespace

PYBIND11_MODULE(etaforge, m) {
    m.doc() = "exact arithmetic for level-10 eta quotients and their antiderivatives";
    m.def("expand", &expand, py::arg("e"), py::arg("terms") = 50,
          "offset and coefficient strings of the q-expansion of an eta quotient");
    m.def("search", &search, py::arg("e_max"), py::arg("b"), py::arg("terms") = 400,
          py::arg("jobs") = 1, "JSON lines for exponent vectors passing the multiplier search");
    m.def("scan", &scan, py::arg("range") = 10, py::arg("jobs") = 1,
          "parameter vectors in the box with rational antiderivatives");
    m.def("integrate_k", &integrate_k, py::arg("a1"), py::arg("a2"), py::arg("a3"),
          "rationality certificate JSON for the k-integrand with the given triple");
    m.def("run_suite", &suite, py::arg("name"), py::arg("terms") = 0, py::arg("jobs") = 1,
          "suite report JSON; terms=0 keeps each check's default truncation");
    m.def("eval_special", &eval_special, py::arg("what"), py::arg("prec") = 256,
          "numeric report JSON for a named special value");
    m.def("row_value", &row_value, py::arg("label"), py::arg("prec") = 256,
          "series-route and closed-form values of one antiderivative row");
}
