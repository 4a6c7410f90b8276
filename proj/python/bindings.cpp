#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "prmghw/cli.hpp"
#include "prmghw/errors.hpp"
#include "prmghw/ghw.hpp"
#include "prmghw/oracle.hpp"
#include "prmghw/prm.hpp"
#include "prmghw/subsets.hpp"

namespace py = pybind11;
using namespace prmghw;

namespace {

std::vector<std::vector<int>> family_elements(const subsets::SubsetFamily& f) {
    std::vector<std::vector<int>> out;
    for (const auto& s : f.members) out.push_back(s.elements());
    return out;
}

}  // namespace

PYBIND11_MODULE(_prmghw, m) {
    m.doc() = "Generalized Hamming weights of binary projective Reed-Muller codes";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<RangeError>(m, "RangeError", base.ptr());
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    m.def("code_dimension", &ghw::code_dimension, py::arg("r"), py::arg("m"));
    m.def("block_length", &ghw::block_length, py::arg("r"), py::arg("m"));
    m.def("ghw_closed", &ghw::ghw_closed, py::arg("k"), py::arg("r"), py::arg("m"));
    m.def("ghw_canonical", &ghw::ghw_canonical, py::arg("k"), py::arg("r"), py::arg("m"));
    m.def("ghw_special", &ghw::ghw_special, py::arg("k"), py::arg("r"), py::arg("m"));
    m.def("gamma_reduction", &ghw::gamma_reduction, py::arg("gamma"), py::arg("r"), py::arg("m"));
    m.def(
        "rho_decompose", [](ghw::Count gamma, int r, int m) { return ghw::rho_decompose(gamma, r, m).descending(); },
        py::arg("gamma"), py::arg("r"), py::arg("m"), "(rho_{m-r-1}, ..., rho_0)");
    m.def(
        "canonical_decompose",
        [](ghw::Count k, int r, int m) {
            std::vector<std::pair<int, int>> out;
            for (const auto& t : ghw::canonical_decompose(k, r, m).terms) out.emplace_back(t.m_i, t.r_i);
            return out;
        },
        py::arg("k"), py::arg("r"), py::arg("m"), "[(m_1, r_1), ...]");
    m.def(
        "hierarchy", [](int r, int m) { return ghw::hierarchy(r, m).values; }, py::arg("r"), py::arg("m"),
        "[d_1, ..., d_C(m,r)]");
    m.def(
        "lower_bound_recursion",
        [](ghw::Count k, int r, int m) {
            ghw::HierarchyCache cache;
            const auto b = ghw::lower_bound_recursion(k, r, m, cache);
            return py::make_tuple(b.value, b.s, b.t);
        },
        py::arg("k"), py::arg("r"), py::arg("m"), "(value, s, t)");
    m.def(
        "shorten_table",
        [](int r, int m) {
            py::list rows;
            for (const auto& row : ghw::shorten_table(r, m)) {
                py::dict d;
                d["k"] = row.k;
                d["gamma"] = row.gamma;
                d["S"] = row.picked ? row.picked->elements() : std::vector<int>{};
                d["Gamma"] = row.Gamma;
                d["n"] = row.n;
                rows.append(d);
            }
            return rows;
        },
        py::arg("r"), py::arg("m"));

    m.def(
        "antilex_prefix", [](int r, int m, std::uint64_t k) { return family_elements(subsets::antilex_prefix(r, m, k)); },
        py::arg("r"), py::arg("m"), py::arg("k"));
    m.def(
        "colex_prefix", [](int r, int m, std::uint64_t k) { return family_elements(subsets::colex_prefix(r, m, k)); },
        py::arg("r"), py::arg("m"), py::arg("k"));
    m.def("min_shadow_bruteforce", &subsets::min_shadow_bruteforce, py::arg("r"), py::arg("m"), py::arg("k"),
          py::arg("budget") = 10'000'000);

    m.def(
        "generator_text",
        [](const std::string& family, int r, int m) {
            return prm::generator_text(prm::build_code({prm::family_from_string(family), r, m}));
        },
        py::arg("family"), py::arg("r"), py::arg("m"));
    m.def(
        "oracle_ghw",
        [](const std::string& family, int r, int m, std::size_t nu, std::uint64_t budget, bool prune, unsigned jobs) {
            const auto code = prm::build_code({prm::family_from_string(family), r, m});
            oracle::OracleResult res;
            {
                py::gil_scoped_release release;
                res = oracle::ghw_oracle(code, nu, {budget, prune, jobs});
            }
            py::dict d;
            d["nu"] = res.nu;
            d["min_support"] = res.min_support;
            d["witness"] = res.witness.to_strings();
            d["subspaces_examined"] = res.subspaces_examined;
            d["exhaustive"] = res.exhaustive;
            return d;
        },
        py::arg("family"), py::arg("r"), py::arg("m"), py::arg("nu"), py::arg("budget") = oracle::kDefaultBudget,
        py::arg("prune") = false, py::arg("jobs") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
