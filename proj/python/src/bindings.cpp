#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zqcode/errors.hpp"
#include "zqcode/families.hpp"
#include "zqcode/json_io.hpp"
#include "zqcode/minweight.hpp"
#include "zqcode/oracle.hpp"
#include "zqcode/quasi.hpp"
#include "zqcode/tutte.hpp"
#include "zqcode/verify.hpp"

namespace py = pybind11;
using namespace zqcode;

namespace {

// Python ints are arbitrary precision; move them through decimal strings.
BigInt to_bigint(const py::handle& value) { return parse_bigint(py::str(value)); }

IntMatrix matrix_from_rows(const py::sequence& rows) {
    if (rows.size() == 0) throw std::invalid_argument("matrix must be nonempty");
    const py::sequence first = rows[0].cast<py::sequence>();
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(first.size()));
    for (int i = 0; i < m.rows; ++i) {
        const py::sequence row = rows[i].cast<py::sequence>();
        if (static_cast<int>(row.size()) != m.cols) throw std::invalid_argument("ragged matrix");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = to_bigint(row[j]);
    }
    return m;
}

struct Analysis {
    DivisorProfile profile;
    WeightQuasi wq;

    explicit Analysis(const py::sequence& rows, int max_columns, int jobs)
        : profile(build_profile(matrix_from_rows(rows), {.max_columns = max_columns, .jobs = jobs})),
          wq(weight_quasi(profile, {.jobs = jobs})) {}

    std::string rho0() const { return profile.lcm_period().get_str(); }
    int rank() const { return profile.full_rank(); }
    int n() const { return profile.ground_size(); }

    std::vector<std::string> elementary_divisors() const {
        std::vector<std::string> out;
        for (const auto& e : profile.full_chain().divisors) out.push_back(e.get_str());
        return out;
    }

    std::string constituents_json() const { return to_json(wq).dump(); }

    std::vector<std::string> weight_distribution_at(const py::handle& q) const {
        std::vector<std::string> out;
        for (const auto& c : weight_distribution(profile, wq, to_bigint(q)).counts)
            out.push_back(c.get_str());
        return out;
    }

    py::object min_weight(const py::handle& q) const {
        const MinWeight d = min_weight_at(profile, wq, to_bigint(q));
        if (d.is_infinite()) return py::none();
        return py::int_(d.value());
    }

    std::string characteristic_json() const {
        return to_json(characteristic_quasi(profile, wq)).dump();
    }

    std::string minweight_report_json() const {
        return to_json(min_weight_report(profile, wq)).dump();
    }

    std::string tutte_json() const { return to_json(tutte_quasi(profile)).dump(); }

    std::string tutte_at(const std::string& u, const std::string& v) const {
        return to_string(tutte_eval(tutte_quasi(profile), parse_rational(u), parse_rational(v)));
    }

    std::string minimum_period_str() const { return minimum_period(wq).get_str(); }

    std::vector<int> ladder(const py::handle& m) const {
        return degree_ladder(profile, wq, to_bigint(m));
    }

    bool verify(int max_q, std::uint64_t budget) const {
        return verify_matrix(profile.matrix(), {.max_q = max_q, .oracle_budget = budget}).ok();
    }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact weight-enumerator quasi-polynomials of codes over Z/qZ";

    py::register_exception<consistency_error>(m, "ConsistencyError");
    py::register_exception<budget_error>(m, "BudgetError");

    py::class_<Analysis>(m, "Analysis")
        .def(py::init<const py::sequence&, int, int>(), py::arg("rows"),
             py::arg("max_columns") = 22, py::arg("jobs") = 1)
        .def_property_readonly("rho0", &Analysis::rho0)
        .def_property_readonly("rank", &Analysis::rank)
        .def_property_readonly("n", &Analysis::n)
        .def("elementary_divisors", &Analysis::elementary_divisors)
        .def("constituents_json", &Analysis::constituents_json)
        .def("weight_distribution", &Analysis::weight_distribution_at, py::arg("q"))
        .def("min_weight", &Analysis::min_weight, py::arg("q"))
        .def("characteristic_json", &Analysis::characteristic_json)
        .def("minweight_report_json", &Analysis::minweight_report_json)
        .def("tutte_json", &Analysis::tutte_json)
        .def("tutte_eval", &Analysis::tutte_at, py::arg("u"), py::arg("v"))
        .def("minimum_period", &Analysis::minimum_period_str)
        .def("degree_ladder", &Analysis::ladder, py::arg("m"))
        .def("verify", &Analysis::verify, py::arg("max_q") = 6,
             py::arg("budget") = std::uint64_t{100'000'000});

    m.def(
        "family",
        [](const std::string& tag, int k, bool transformed) {
            const FamilySpec spec = make_family(parse_family_tag(tag), k);
            const IntMatrix& g = transformed ? spec.transformed : spec.generator;
            std::vector<std::vector<long>> rows(static_cast<std::size_t>(g.rows));
            for (int i = 0; i < g.rows; ++i)
                for (int j = 0; j < g.cols; ++j)
                    rows[static_cast<std::size_t>(i)].push_back(g.at(i, j).get_si());
            return rows;
        },
        py::arg("tag"), py::arg("k"), py::arg("transformed") = false,
        "Generator matrix of the N_k or Z_k family code.");

    m.def(
        "char_quasi_closed",
        [](const std::string& tag, int k, const py::handle& q) {
            return char_quasi_closed(parse_family_tag(tag), k, to_bigint(q)).get_str();
        },
        py::arg("tag"), py::arg("k"), py::arg("q"),
        "Closed-form count of full-support codewords, as a decimal string.");

    m.def(
        "oracle_distribution",
        [](const py::sequence& rows, const py::handle& q, std::uint64_t budget) {
            const OracleResult r = oracle_enumerate(matrix_from_rows(rows), to_bigint(q),
                                                    {.budget = budget});
            std::vector<std::string> out;
            for (const auto& c : r.distribution.counts) out.push_back(c.get_str());
            return out;
        },
        py::arg("rows"), py::arg("q"), py::arg("budget") = std::uint64_t{100'000'000},
        "Brute-force weight distribution, independent of the quasi-polynomial pipeline.");
}
