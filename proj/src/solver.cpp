#include "fracpde/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fracpde {

namespace {

struct FracTerm {
    double coeff;                    // kappa * tau^exponent / 2
    const std::vector<double>* lam;  // indices 0..N
};

Tridiagonal constant_interior_system(double a, double h, int M) {
    const int n = M - 1;
    const double off = 1.0 / 12.0 - a / (h * h);
    const double mid = 10.0 / 12.0 + 2.0 * a / (h * h);
    Tridiagonal sys;
    sys.lower.assign(n - 1, off);
    sys.diag.assign(n, mid);
    sys.upper.assign(n - 1, off);
    return sys;
}

Field sample(const SpaceTimeFn& f, const Grid& g, double t) {
    Field out(static_cast<size_t>(g.M) + 1);
    for (int i = 0; i <= g.M; ++i) out[i] = f(g.x(i), t);
    return out;
}

void check_domain(double pL, double pT, const Grid& g) {
    if (std::abs(g.L - pL) > 1e-12 || std::abs(g.T - pT) > 1e-12)
        throw std::invalid_argument("grid domain does not match the problem domain");
}

// One implicit step per time level. The unknown-level share of each
// fractional term sits in the constant tridiagonal matrix; everything known
// (the full stored history, the averaged source, the optional velocity
// forcing) accumulates on the right-hand side.
SolutionHistory step_core(const Grid& grid, const std::vector<FracTerm>& terms,
                          const SpaceTimeFn& source, const TimeFn& left_bc,
                          const TimeFn& right_bc, const Field& initial,
                          const Field* velocity_forcing) {
    const int M = grid.M, N = grid.N;
    const double h = grid.h(), tau = grid.tau();

    double a = 0.0;
    for (const FracTerm& t : terms) a += t.coeff * (*t.lam)[0];
    const Tridiagonal sys = constant_interior_system(a, h, M);
    const double off = 1.0 / 12.0 - a / (h * h);

    SolutionHistory out{grid, {}};
    out.levels.assign(static_cast<size_t>(N) + 1, Field(static_cast<size_t>(M) + 1, 0.0));
    if (!initial.empty()) {
        if (static_cast<int>(initial.size()) != M + 1)
            throw std::invalid_argument("initial field must have M+1 nodes");
        out.levels[0] = initial;
    }

    std::vector<Field> d2(static_cast<size_t>(N) + 1);
    d2[0] = second_diff(out.levels[0], h);

    Field fn = sample(source, grid, 0.0);
    Field favg(static_cast<size_t>(M) + 1);
    std::vector<double> rhs(static_cast<size_t>(M) - 1);

    for (int n = 0; n < N; ++n) {
        const double t1 = grid.t(n + 1);
        Field fn1 = sample(source, grid, t1);

        Field rhs_full = apply_compact(out.levels[n]);

        for (const FracTerm& term : terms) {
            const std::vector<double>& lam = *term.lam;
            for (int m = 0; m <= n; ++m) {
                const double w = term.coeff * (lam[n + 1 - m] + lam[n - m]);
                const double* src = d2[m].data();
                for (int i = 1; i < M; ++i) rhs_full[i] += w * src[i];
            }
        }

        for (int i = 0; i <= M; ++i) favg[i] = fn[i] + fn1[i];
        const Field hf = apply_compact(favg);
        for (int i = 1; i < M; ++i) rhs_full[i] += 0.5 * tau * hf[i];

        if (velocity_forcing)
            for (int i = 1; i < M; ++i) rhs_full[i] += (*velocity_forcing)[i];

        const double ub0 = left_bc(t1), ubM = right_bc(t1);
        for (int i = 1; i < M; ++i) rhs[i - 1] = rhs_full[i];
        rhs[0] -= off * ub0;
        rhs[M - 2] -= off * ubM;

        const std::vector<double> sol = thomas_solve(sys, rhs);
        Field& next = out.levels[n + 1];
        next[0] = ub0;
        next[M] = ubM;
        for (int i = 1; i < M; ++i) next[i] = sol[i - 1];

        d2[n + 1] = second_diff(next, h);
        fn = std::move(fn1);
    }
    return out;
}

void check_callables(const SpaceTimeFn& source, const TimeFn& left, const TimeFn& right) {
    if (!source) throw std::invalid_argument("problem source function is not set");
    if (!left || !right) throw std::invalid_argument("problem boundary functions are not set");
}

}  // namespace

Tridiagonal assemble_lhs(const SubDiffusionProblem& problem, const Grid& grid,
                         const WeightSequence& lambdas_alpha,
                         const WeightSequence& lambdas_beta) {
    if (lambdas_alpha.values.empty() || lambdas_beta.values.empty())
        throw std::invalid_argument("lambda sequences must cover index 0");
    const double tau = grid.tau();
    const double a =
        problem.kappa1 * std::pow(tau, 1.0 - problem.alpha.value()) / 2.0 * lambdas_alpha.values[0] +
        problem.kappa2 * std::pow(tau, 1.0 - problem.beta.value()) / 2.0 * lambdas_beta.values[0];
    return constant_interior_system(a, grid.h(), grid.M);
}

Field history_term(const std::vector<Field>& levels, int n,
                   const WeightSequence& lambdas, double h) {
    if (n < 0) throw std::invalid_argument("time index must be nonnegative");
    if (static_cast<int>(levels.size()) < n + 1)
        throw std::invalid_argument("history needs stored levels 0..n");
    if (static_cast<int>(lambdas.values.size()) < n + 2)
        throw std::invalid_argument("lambda sequence too short for step " + std::to_string(n));
    const std::vector<double>& lam = lambdas.values;
    Field acc(levels[0].size(), 0.0);
    for (int m = 0; m <= n; ++m) {
        const double w = lam[n + 1 - m] + lam[n - m];
        const Field d2 = second_diff(levels[m], h);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += w * d2[i];
    }
    return acc;
}

SolutionHistory solve_subdiffusion(const SubDiffusionProblem& problem, const Grid& grid) {
    check_domain(problem.L, problem.T, grid);
    check_callables(problem.source, problem.left_bc, problem.right_bc);
    if (problem.kappa1 < 0.0 || problem.kappa2 < 0.0)
        throw std::invalid_argument("diffusion coefficients must be nonnegative");

    const double tau = grid.tau();
    const WeightSequence la = lambda_subdiffusion(problem.alpha, grid.N);
    const WeightSequence lb = lambda_subdiffusion(problem.beta, grid.N);
    std::vector<FracTerm> terms;
    if (problem.kappa1 != 0.0)
        terms.push_back({problem.kappa1 * std::pow(tau, 1.0 - problem.alpha.value()) / 2.0, &la.values});
    if (problem.kappa2 != 0.0)
        terms.push_back({problem.kappa2 * std::pow(tau, 1.0 - problem.beta.value()) / 2.0, &lb.values});
    return step_core(grid, terms, problem.source, problem.left_bc, problem.right_bc,
                     problem.initial, nullptr);
}

SolutionHistory solve_wave(const WaveProblem& problem, const Grid& grid) {
    check_domain(problem.L, problem.T, grid);
    check_callables(problem.source, problem.left_bc, problem.right_bc);
    if (!problem.initial_velocity)
        throw std::invalid_argument("wave problem needs an initial velocity function");
    if (!(problem.kappa > 0.0))
        throw std::invalid_argument("wave diffusion coefficient must be positive");

    const double tau = grid.tau();
    const WeightSequence lw = lambda_wave(problem.alpha, grid.N);
    const std::vector<FracTerm> terms{
        {problem.kappa * std::pow(tau, problem.alpha.value() + 1.0) / 2.0, &lw.values}};

    Field phi(static_cast<size_t>(grid.M) + 1);
    for (int i = 0; i <= grid.M; ++i) phi[i] = problem.initial_velocity(grid.x(i));
    Field vel = apply_compact(phi);
    for (double& v : vel) v *= tau;

    return step_core(grid, terms, problem.source, problem.left_bc, problem.right_bc,
                     problem.initial, &vel);
}

}  // namespace fracpde
