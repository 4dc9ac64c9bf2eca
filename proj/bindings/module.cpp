#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msip/experiment.hpp"
#include "msip/json_io.hpp"
#include "msip/reports.hpp"

#include <sstream>

namespace py = pybind11;
using namespace msip;

namespace {

std::string validate_instance(const std::string& text) {
    Program P = parse_program(text);
    return tree_summary_json(P, build_tree(P.A));
}

std::string graver_basis_of(const std::string& text, int submatrix) {
    Program P = parse_program(text);
    IntMatrix target = P.A.entries;
    if (submatrix != 0) {
        MultistageTree tree = build_tree(P.A);
        target = leaf_subprogram(P, tree, submatrix).A;
    }
    return graver_json(graver_basis(target));
}

std::string solve_instance(const std::string& text, const std::string& method, long long box_lo,
                           long long box_hi, std::uint64_t budget) {
    Program P = parse_program(text);
    Box box = effective_box(P, Int(box_lo), Int(box_hi));
    SolveReport rep = (method == "brute") ? brute_force_ilp(P, box, budget)
                                          : solve_augmentation(P, box, std::nullopt, {}, budget);
    return solve_report_json(rep);
}

std::string proximity_of(const std::string& text, long long box_lo, long long box_hi,
                         std::uint64_t budget) {
    Program P = parse_program(text);
    MultistageTree tree = build_tree(P.A);
    Box box = effective_box(P, Int(box_lo), Int(box_hi));
    return proximity_json(proximity_experiment(P, tree, box, budget));
}

std::string graver_experiment_of(const std::string& text) {
    Program P = parse_program(text);
    MultistageTree tree = build_tree(P.A);
    return graver_norm_json(graver_norm_experiment(P.A, tree));
}

std::string lemma42_of(const std::string& text, long max_card, std::uint64_t budget) {
    MultisetFile f = parse_multiset_file(text);
    MultistageTree tree = build_tree(f.matrix);
    return lemma42_json(find_small_valid_submultisets(tree, f.sets, f.delta, max_card, budget),
                        max_card);
}

std::string bound_table_of(int d, long long delta, int t, long k1, const std::string& rho) {
    return bound_table_json(bound_constants(d, Int(delta), t, Rational::parse(rho), k1));
}

std::string generate_instance(int t, const std::vector<int>& s, int branching, int r, int delta,
                              std::uint64_t seed, long long b_lo, long long b_hi, long long c_lo,
                              long long c_hi) {
    GenParams p;
    p.t = t;
    p.s = s;
    p.branching = branching;
    p.r = r;
    p.delta = delta;
    p.seed = seed;
    p.bLo = b_lo;
    p.bHi = b_hi;
    p.cLo = c_lo;
    p.cHi = c_hi;
    return serialize_program(generate(p));
}

std::string sweep_csv(std::uint64_t seed, int count, long long box_lo, long long box_hi,
                      std::uint64_t budget) {
    std::ostringstream csv;
    csv << csv_header() << "\n";
    for (const auto& [id, P] : sweep_instances(seed, count))
        csv << to_csv(run_experiments(id, P, Int(box_lo), Int(box_hi), budget)) << "\n";
    return csv.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact toolkit for multistage stochastic integer programs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    m.def("validate_instance", &validate_instance, py::arg("text"),
          "Validate an instance and return the tree summary as JSON text.");
    m.def("graver_basis", &graver_basis_of, py::arg("text"), py::arg("submatrix") = 0,
          "Graver basis of the instance matrix (or leaf subprogram) as JSON text.");
    m.def("solve", &solve_instance, py::arg("text"), py::arg("method"), py::arg("box_lo"),
          py::arg("box_hi"), py::arg("budget") = 50'000'000,
          "Solve over an explicit box by augmentation or brute force; JSON report.");
    m.def("proximity", &proximity_of, py::arg("text"), py::arg("box_lo"), py::arg("box_hi"),
          py::arg("budget") = 50'000'000,
          "LP vertex vs nearest integral optimum; JSON report.");
    m.def("graver_experiment", &graver_experiment_of, py::arg("text"),
          "Graver complexity against the certified bounds; JSON report.");
    m.def("lemma42", &lemma42_of, py::arg("text"), py::arg("max_card"),
          py::arg("budget") = 50'000'000,
          "Exhaustive search for small valid submultisets; JSON report.");
    m.def("bound_table", &bound_table_of, py::arg("d"), py::arg("delta"), py::arg("t"),
          py::arg("k1") = 1, py::arg("rho") = "1",
          "The structural bound ladder as exact decimal strings; JSON text.");
    m.def("generate_instance", &generate_instance, py::arg("t"), py::arg("s"),
          py::arg("branching") = 2, py::arg("r") = 1, py::arg("delta") = 1, py::arg("seed") = 0,
          py::arg("b_lo") = -3, py::arg("b_hi") = 3, py::arg("c_lo") = -3, py::arg("c_hi") = 3,
          "Deterministic seeded instance in the canonical JSON format.");
    m.def("sweep_csv", &sweep_csv, py::arg("seed"), py::arg("count"), py::arg("box_lo"),
          py::arg("box_hi"), py::arg("budget") = 50'000'000,
          "Run the experiment trio over a seeded corpus; CSV text.");
}
