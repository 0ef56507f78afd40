#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracpde/analysis.hpp"

namespace py = pybind11;

namespace {

using namespace fracpde;

WeightKind parse_kind(const std::string& kind) {
    if (kind == "grunwald_derivative") return WeightKind::GrunwaldDerivative;
    if (kind == "grunwald_integral") return WeightKind::GrunwaldIntegral;
    if (kind == "lambda_subdiffusion") return WeightKind::LambdaSubdiffusion;
    if (kind == "lambda_wave") return WeightKind::LambdaWave;
    throw std::invalid_argument("unknown weight kind '" + kind + "'");
}

py::list table_to_list(const RateTable& table) {
    py::list rows;
    for (const RateRow& row : table.rows) {
        py::dict d;
        d["step"] = row.step;
        d["e_inf"] = row.e_inf;
        d["rate_inf"] = row.rate_inf ? py::object(py::float_(*row.rate_inf)) : py::none();
        d["e_l2"] = row.e_l2;
        d["rate_l2"] = row.rate_l2 ? py::object(py::float_(*row.rate_l2)) : py::none();
        rows.append(std::move(d));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "compact finite-difference schemes for time-fractional diffusion problems";
    m.attr("__version__") = "0.1.0";

    m.def(
        "grunwald_derivative_weights",
        [](double order, int n) { return grunwald_derivative_weights(FracOrder(order), n).values; },
        py::arg("order"), py::arg("n"));
    m.def(
        "grunwald_integral_weights",
        [](double order, int n) { return grunwald_integral_weights(FracOrder(order), n).values; },
        py::arg("order"), py::arg("n"));
    m.def(
        "lambda_subdiffusion",
        [](double order, int n) { return lambda_subdiffusion(FracOrder(order), n).values; },
        py::arg("order"), py::arg("n"));
    m.def(
        "lambda_wave", [](double order, int n) { return lambda_wave(FracOrder(order), n).values; },
        py::arg("order"), py::arg("n"));
    m.def(
        "gen_fn_subdiffusion",
        [](double order, double x) { return gen_fn_subdiffusion(FracOrder(order), x); },
        py::arg("order"), py::arg("x"));
    m.def(
        "gen_fn_wave", [](double order, double x) { return gen_fn_wave(FracOrder(order), x); },
        py::arg("order"), py::arg("x"));

    m.def("problem_ids", &problem_ids);

    m.def(
        "toeplitz_min_eigenvalue",
        [](const std::string& kind, double order, int size) {
            return toeplitz_psd_check(parse_kind(kind), FracOrder(order), size).min_eigenvalue;
        },
        py::arg("kind"), py::arg("order"), py::arg("size"));

    m.def(
        "solve_final",
        [](const std::string& problem_id, double alpha, double beta, int M, int N) {
            const NamedProblem prob = find_problem(problem_id, alpha, beta);
            const Grid grid(M, N, prob.domain_length(), prob.final_time());
            const SolutionHistory hist = solve_named(prob, grid);
            py::dict out;
            py::list xs, us;
            for (int i = 0; i <= grid.M; ++i) {
                xs.append(grid.x(i));
                us.append(hist.levels.back()[i]);
            }
            out["x"] = std::move(xs);
            out["u"] = std::move(us);
            if (prob.has_exact()) {
                const ErrorReport rep = error_report(hist, prob.exact());
                out["e_inf"] = rep.e_inf;
                out["e_l2"] = rep.e_l2;
            }
            return out;
        },
        py::arg("problem_id"), py::arg("alpha"), py::arg("beta"), py::arg("M"), py::arg("N"),
        "Solve on an (M, N) grid; returns the final-time field and, when the "
        "problem has a closed-form solution, the space-time error norms.");

    m.def(
        "rate_study",
        [](const std::string& problem_id, double alpha, double beta, const std::string& axis,
           int fixed, const std::vector<int>& steps) {
            const NamedProblem prob = find_problem(problem_id, alpha, beta);
            if (axis == "temporal") return table_to_list(temporal_rate_study(prob, fixed, steps));
            if (axis == "spatial") return table_to_list(spatial_rate_study(prob, fixed, steps));
            throw std::invalid_argument("axis must be 'temporal' or 'spatial'");
        },
        py::arg("problem_id"), py::arg("alpha"), py::arg("beta"), py::arg("axis"), py::arg("fixed"),
        py::arg("steps"),
        "Refinement study along one axis; rows carry step, errors, and log2 rates.");
}
