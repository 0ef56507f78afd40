#pragma once

#include <optional>
#include <vector>

#include "fracpde/problems.hpp"

namespace fracpde {

/// e_inf: max over every time level of the max norm (all nodes).
/// e_l2:  max over every time level of the discrete L2 norm (interior nodes).
struct ErrorReport {
    double e_inf;
    double e_l2;
    Grid grid;
};

enum class RateAxis { Temporal, Spatial };

struct RateRow {
    double step;
    double e_inf;
    std::optional<double> rate_inf;
    double e_l2;
    std::optional<double> rate_l2;
};

/// One row per refinement level; rate = log2(E(coarser)/E(finer)) under
/// step halving, undefined on the first row.
struct RateTable {
    RateAxis axis;
    std::vector<RateRow> rows;
};

ErrorReport error_report(const SolutionHistory& history, const SpaceTimeFn& exact);

/// Reference variant: the reference grid must subdivide the coarse grid's
/// nodes exactly (same L and T, integer stride in both directions).
ErrorReport error_report(const SolutionHistory& history, const SolutionHistory& reference);

SolutionHistory solve_named(const NamedProblem& problem, const Grid& grid);

/// One solve per time-step count in N_list (a doubling sequence) at fixed
/// spatial size M_fixed. Problems without exact solutions are compared
/// against one reference solve on their reference grid.
RateTable temporal_rate_study(const NamedProblem& problem, int M_fixed,
                              const std::vector<int>& N_list);

/// Spatial analogue: fixed N_fixed, doubling M_list.
RateTable spatial_rate_study(const NamedProblem& problem, int N_fixed,
                             const std::vector<int>& M_list);

struct PsdResult {
    double min_eigenvalue;
    bool pass;
};

/// Smallest eigenvalue of the size x size symmetric Toeplitz matrix with
/// diagonal lambda_0 and j-th off-diagonal lambda_j / 2; pass iff >= -1e-10.
/// Accepts the two lambda kinds only.
PsdResult toeplitz_psd_check(WeightKind kind, FracOrder order, int size);

enum class OperatorKind { Derivative, Integral };

/// Applies the weighted/shifted operator to t^sigma (cut off at t < 0),
/// compares with the closed-form fractional derivative/integral of the
/// monomial at t = 1, and tabulates the error per step size. Supported
/// shifts: (0,-1), (1,0), (1,-1); sigma >= 4.
RateTable operator_order_check(OperatorKind kind, FracOrder order, ShiftPair shifts,
                               int sigma, const std::vector<double>& tau_list);

/// Mean of the defined rate_inf entries.
double observed_order(const RateTable& table);

struct StabilityResult {
    double observed_deviation;
    double bound;
    bool pass;
};

/// Runs the problem unperturbed and with initial data shifted by rho
/// (vanishing at the boundaries); checks max_k ||v^k - u^k|| against
/// sqrt(5) c2 e^T ||d2 rho|| + ||rho||, c2 = 1 + kappa1/Gamma(1-alpha)
/// + kappa2/Gamma(1-beta).
StabilityResult stability_experiment(const SubDiffusionProblem& problem, const Grid& grid,
                                     const Field& rho);

/// Wave analogue with perturbations rho of the initial data and rho_tilde of
/// the initial velocity; bound sqrt(5) e^T ||(kappa/Gamma(alpha+1) + 1) d2 rho
/// + rho_tilde|| + ||rho||.
StabilityResult stability_experiment(const WaveProblem& problem, const Grid& grid,
                                     const Field& rho, const Field& rho_tilde);

}  // namespace fracpde
