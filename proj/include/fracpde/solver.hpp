#pragma once

#include <functional>
#include <vector>

#include "fracpde/grid.hpp"
#include "fracpde/weights.hpp"

namespace fracpde {

using SpaceTimeFn = std::function<double(double, double)>;  // (x, t)
using TimeFn = std::function<double(double)>;
using SpaceFn = std::function<double(double)>;

/// du/dt = kappa1 * D^alpha d2u/dx2 + kappa2 * D^beta d2u/dx2 + f on
/// [0,L] x (0,T], with Dirichlet data and zero initial condition. A nonzero
/// `initial` is accepted so perturbation experiments can reuse the stepper.
struct SubDiffusionProblem {
    FracOrder alpha;
    FracOrder beta;
    double kappa1 = 1.0;
    double kappa2 = 1.0;
    SpaceTimeFn source;
    TimeFn left_bc;
    TimeFn right_bc;
    Field initial;     // empty means identically zero
    SpaceTimeFn exact; // optional
    double L = 1.0;
    double T = 1.0;
};

/// du/dt = phi(x) + kappa * I^alpha d2u/dx2 + f, the integro-differential
/// form of the diffusion-wave equation of Caputo order gamma = alpha + 1.
/// `source` is the transformed right-hand side I^alpha g in closed form.
struct WaveProblem {
    double gamma;
    FracOrder alpha;
    double kappa = 1.0;
    SpaceFn initial_velocity;
    SpaceTimeFn source;
    TimeFn left_bc;
    TimeFn right_bc;
    Field initial;
    SpaceTimeFn exact;
    double L = 1.0;
    double T = 1.0;
};

/// Every computed time level; the fractional convolution needs all of them.
struct SolutionHistory {
    Grid grid;
    std::vector<Field> levels;  // N+1 fields of length M+1
};

/// Constant-in-time interior matrix of the implicit step:
/// [H - (kappa1 tau^{1-alpha}/2) lambda_0 d2 - (kappa2 tau^{1-beta}/2) lambda_0 d2].
Tridiagonal assemble_lhs(const SubDiffusionProblem& problem, const Grid& grid,
                         const WeightSequence& lambdas_alpha,
                         const WeightSequence& lambdas_beta);

/// Known part of the fractional convolution at step n:
/// sum_{k=1}^{n+1} lambda_k d2 u^{n+1-k} + sum_{k=0}^{n} lambda_k d2 u^{n-k}.
/// Needs lambdas up to index n+1 and levels 0..n.
Field history_term(const std::vector<Field>& levels, int n,
                   const WeightSequence& lambdas, double h);

SolutionHistory solve_subdiffusion(const SubDiffusionProblem& problem, const Grid& grid);

SolutionHistory solve_wave(const WaveProblem& problem, const Grid& grid);

}  // namespace fracpde
