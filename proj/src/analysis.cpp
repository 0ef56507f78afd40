#include "fracpde/analysis.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracpde {

namespace {

double gamma_fn(double x) { return std::exp(std::lgamma(x)); }

void check_doubling(const std::vector<int>& list, const char* what) {
    if (list.size() < 2)
        throw std::invalid_argument(std::string(what) + " needs at least two refinement levels");
    for (size_t i = 0; i < list.size(); ++i) {
        if (list[i] < 1) throw std::invalid_argument(std::string(what) + " entries must be positive");
        if (i > 0 && list[i] != 2 * list[i - 1])
            throw std::invalid_argument(std::string(what) + " must double at every level (step halving)");
    }
}

void fill_rates(RateTable& table) {
    for (size_t i = 1; i < table.rows.size(); ++i) {
        RateRow& cur = table.rows[i];
        const RateRow& prev = table.rows[i - 1];
        if (prev.e_inf > 0.0 && cur.e_inf > 0.0) cur.rate_inf = std::log2(prev.e_inf / cur.e_inf);
        if (prev.e_l2 > 0.0 && cur.e_l2 > 0.0) cur.rate_l2 = std::log2(prev.e_l2 / cur.e_l2);
    }
}

void check_boundary_zero(const Field& rho, int M) {
    if (static_cast<int>(rho.size()) != M + 1)
        throw std::invalid_argument("perturbation field must have M+1 nodes");
    if (rho.front() != 0.0 || rho.back() != 0.0)
        throw std::invalid_argument("perturbation must vanish at the boundaries");
}

double max_l2_deviation(const SolutionHistory& a, const SolutionHistory& b) {
    const double h = a.grid.h();
    double dev = 0.0;
    Field diff(a.levels[0].size());
    for (size_t k = 0; k < a.levels.size(); ++k) {
        for (size_t i = 0; i < diff.size(); ++i) diff[i] = a.levels[k][i] - b.levels[k][i];
        dev = std::max(dev, discrete_l2_norm(diff, h));
    }
    return dev;
}

}  // namespace

ErrorReport error_report(const SolutionHistory& history, const SpaceTimeFn& exact) {
    if (!exact) throw std::invalid_argument("error report needs a callable exact solution");
    const Grid& g = history.grid;
    const double h = g.h();
    double e_inf = 0.0, e_l2 = 0.0;
    Field diff(static_cast<size_t>(g.M) + 1);
    for (int k = 0; k <= g.N; ++k) {
        for (int i = 0; i <= g.M; ++i) diff[i] = exact(g.x(i), g.t(k)) - history.levels[k][i];
        e_inf = std::max(e_inf, max_norm(diff));
        e_l2 = std::max(e_l2, discrete_l2_norm(diff, h));
    }
    return {e_inf, e_l2, g};
}

ErrorReport error_report(const SolutionHistory& history, const SolutionHistory& reference) {
    const Grid& g = history.grid;
    const Grid& r = reference.grid;
    if (std::abs(g.L - r.L) > 1e-12 || std::abs(g.T - r.T) > 1e-12)
        throw std::invalid_argument("reference history covers a different domain");
    if (r.M % g.M != 0 || r.N % g.N != 0)
        throw std::invalid_argument("reference grid nodes do not coincide with the coarse grid");
    const int sx = r.M / g.M, st = r.N / g.N;
    const double h = g.h();
    double e_inf = 0.0, e_l2 = 0.0;
    Field diff(static_cast<size_t>(g.M) + 1);
    for (int k = 0; k <= g.N; ++k) {
        const Field& fine = reference.levels[static_cast<size_t>(k) * st];
        for (int i = 0; i <= g.M; ++i) diff[i] = fine[static_cast<size_t>(i) * sx] - history.levels[k][i];
        e_inf = std::max(e_inf, max_norm(diff));
        e_l2 = std::max(e_l2, discrete_l2_norm(diff, h));
    }
    return {e_inf, e_l2, g};
}

SolutionHistory solve_named(const NamedProblem& problem, const Grid& grid) {
    return problem.kind == ProblemKind::SubDiffusion ? solve_subdiffusion(*problem.sub, grid)
                                                     : solve_wave(*problem.wave, grid);
}

namespace {

RateTable rate_study(const NamedProblem& problem, RateAxis axis, int fixed,
                     const std::vector<int>& list) {
    check_doubling(list, axis == RateAxis::Temporal ? "time-step list" : "spatial list");
    const double L = problem.domain_length(), T = problem.final_time();

    std::optional<SolutionHistory> reference;
    if (!problem.has_exact()) {
        if (!problem.reference_grid)
            throw std::invalid_argument("problem '" + problem.id +
                                        "' has neither an exact solution nor a reference grid");
        reference = solve_named(problem, *problem.reference_grid);
    }

    RateTable table{axis, {}};
    for (int n : list) {
        const Grid g = axis == RateAxis::Temporal ? Grid(fixed, n, L, T) : Grid(n, fixed, L, T);
        const SolutionHistory hist = solve_named(problem, g);
        const ErrorReport rep =
            reference ? error_report(hist, *reference) : error_report(hist, problem.exact());
        const double step = axis == RateAxis::Temporal ? g.tau() : g.h();
        table.rows.push_back({step, rep.e_inf, std::nullopt, rep.e_l2, std::nullopt});
    }
    fill_rates(table);
    return table;
}

}  // namespace

RateTable temporal_rate_study(const NamedProblem& problem, int M_fixed,
                              const std::vector<int>& N_list) {
    return rate_study(problem, RateAxis::Temporal, M_fixed, N_list);
}

RateTable spatial_rate_study(const NamedProblem& problem, int N_fixed,
                             const std::vector<int>& M_list) {
    return rate_study(problem, RateAxis::Spatial, N_fixed, M_list);
}

PsdResult toeplitz_psd_check(WeightKind kind, FracOrder order, int size) {
    if (kind != WeightKind::LambdaSubdiffusion && kind != WeightKind::LambdaWave)
        throw std::invalid_argument("positivity check applies to the lambda kinds only");
    if (size < 1) throw std::invalid_argument("matrix size must be at least 1");
    const WeightSequence lam = kind == WeightKind::LambdaSubdiffusion
                                   ? lambda_subdiffusion(order, size - 1)
                                   : lambda_wave(order, size - 1);
    Eigen::MatrixXd t(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            t(i, j) = i == j ? lam.values[0] : lam.values[std::abs(i - j)] / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues()(0);
    return {min_eig, min_eig >= -1e-10};
}

RateTable operator_order_check(OperatorKind kind, FracOrder order, ShiftPair shifts,
                               int sigma, const std::vector<double>& tau_list) {
    const bool supported = (shifts.p == 0 && shifts.q == -1) ||
                           (shifts.p == 1 && shifts.q == 0) ||
                           (shifts.p == 1 && shifts.q == -1);
    if (!supported)
        throw std::invalid_argument("supported shift pairs: (0,-1), (1,0), (1,-1)");
    if (sigma < 4)
        throw std::invalid_argument("test exponent must be at least 4 for a clean second-order regime");
    if (tau_list.size() < 2)
        throw std::invalid_argument("operator-order check needs at least two step sizes");
    for (size_t i = 1; i < tau_list.size(); ++i)
        if (std::abs(tau_list[i] - tau_list[i - 1] / 2.0) > 1e-15 * tau_list[i - 1])
            throw std::invalid_argument("step sizes must halve at every level");

    const double a = order.value();
    const auto [c1, c2] = kind == OperatorKind::Derivative
                              ? weighted_shift_coefficients_derivative(order, shifts)
                              : weighted_shift_coefficients_integral(order, shifts);
    const double exact = kind == OperatorKind::Derivative
                             ? gamma_fn(sigma + 1.0) / gamma_fn(sigma + 1.0 - a)
                             : gamma_fn(sigma + 1.0) / gamma_fn(sigma + 1.0 + a);
    const double scale_sign = kind == OperatorKind::Derivative ? -a : a;

    RateTable table{RateAxis::Temporal, {}};
    for (double tau : tau_list) {
        const int K = static_cast<int>(std::ceil(1.0 / tau)) + std::max(shifts.p, shifts.q) + 2;
        const WeightSequence w = kind == OperatorKind::Derivative
                                     ? grunwald_derivative_weights(order, K)
                                     : grunwald_integral_weights(order, K);
        const auto shifted_sum = [&](int r) {
            double s = 0.0;
            for (int k = 0; k <= K; ++k) {
                const double t = 1.0 - (k - r) * tau;
                if (t > 0.0) s += w.values[k] * std::pow(t, sigma);
            }
            return std::pow(tau, scale_sign) * s;
        };
        const double value = c1 * shifted_sum(shifts.p) + c2 * shifted_sum(shifts.q);
        const double err = std::abs(value - exact);
        table.rows.push_back({tau, err, std::nullopt, err, std::nullopt});
    }
    fill_rates(table);
    return table;
}

double observed_order(const RateTable& table) {
    double sum = 0.0;
    int count = 0;
    for (const RateRow& row : table.rows)
        if (row.rate_inf) {
            sum += *row.rate_inf;
            ++count;
        }
    if (count == 0) throw std::invalid_argument("rate table has no defined rates");
    return sum / count;
}

StabilityResult stability_experiment(const SubDiffusionProblem& problem, const Grid& grid,
                                     const Field& rho) {
    check_boundary_zero(rho, grid.M);
    const SolutionHistory base = solve_subdiffusion(problem, grid);

    SubDiffusionProblem perturbed = problem;
    perturbed.initial = problem.initial.empty() ? Field(rho.size(), 0.0) : problem.initial;
    for (size_t i = 0; i < rho.size(); ++i) perturbed.initial[i] += rho[i];
    const SolutionHistory shifted = solve_subdiffusion(perturbed, grid);

    const double h = grid.h();
    const double c2 = 1.0 + problem.kappa1 / gamma_fn(1.0 - problem.alpha.value()) +
                      problem.kappa2 / gamma_fn(1.0 - problem.beta.value());
    const double bound = std::sqrt(5.0) * c2 * std::exp(grid.T) *
                             discrete_l2_norm(second_diff(rho, h), h) +
                         discrete_l2_norm(rho, h);
    const double dev = max_l2_deviation(shifted, base);
    return {dev, bound, dev <= bound};
}

StabilityResult stability_experiment(const WaveProblem& problem, const Grid& grid,
                                     const Field& rho, const Field& rho_tilde) {
    check_boundary_zero(rho, grid.M);
    if (rho_tilde.size() != rho.size())
        throw std::invalid_argument("velocity perturbation must have M+1 nodes");
    const SolutionHistory base = solve_wave(problem, grid);

    WaveProblem perturbed = problem;
    perturbed.initial = problem.initial.empty() ? Field(rho.size(), 0.0) : problem.initial;
    for (size_t i = 0; i < rho.size(); ++i) perturbed.initial[i] += rho[i];
    const SpaceFn base_velocity = problem.initial_velocity;
    const int M = grid.M;
    const double L = grid.L;
    perturbed.initial_velocity = [base_velocity, rho_tilde, M, L](double x) {
        const int i = static_cast<int>(std::lround(x * M / L));
        return base_velocity(x) + rho_tilde[i];
    };
    const SolutionHistory shifted = solve_wave(perturbed, grid);

    const double h = grid.h();
    const double factor = problem.kappa / gamma_fn(problem.alpha.value() + 1.0) + 1.0;
    const Field d2rho = second_diff(rho, h);
    Field combined(rho.size());
    for (size_t i = 0; i < rho.size(); ++i) combined[i] = factor * d2rho[i] + rho_tilde[i];
    const double bound = std::sqrt(5.0) * std::exp(grid.T) * discrete_l2_norm(combined, h) +
                         discrete_l2_norm(rho, h);
    const double dev = max_l2_deviation(shifted, base);
    return {dev, bound, dev <= bound};
}

}  // namespace fracpde
