#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracpde/solver.hpp"

namespace fracpde {

enum class ProblemKind { SubDiffusion, Wave };

/// A registered manufactured problem. Problems either carry a closed-form
/// exact solution or a reference grid on which a fine numerical solution
/// stands in for the exact one (never both).
struct NamedProblem {
    std::string id;
    ProblemKind kind;
    std::optional<SubDiffusionProblem> sub;
    std::optional<WaveProblem> wave;
    std::optional<Grid> reference_grid;

    bool has_exact() const;
    const SpaceTimeFn& exact() const;
    double domain_length() const;
    double final_time() const;
};

/// u = sin(x) t^{3-a-b}, two fractional terms with kappa1 = kappa2 = 1.
NamedProblem make_sinx_subdiffusion(FracOrder alpha, FracOrder beta);

/// u = t^2 sin(2 pi x), single fractional term (kappa2 = 0), homogeneous BCs.
NamedProblem make_t2sin2pix_subdiffusion(FracOrder alpha);

/// u = e^x t^{alpha+2}, zero initial velocity, inhomogeneous BCs.
NamedProblem make_exp_wave(FracOrder alpha);

/// Initial velocity 0.1 sin(2 pi x), homogeneous BCs, no closed-form solution;
/// compared against a fine-grid reference (M=400, N=4000).
NamedProblem make_sin2pix_wave_with_velocity(FracOrder alpha);

std::vector<std::string> problem_ids();

/// Looks up one of the registered ids ("sub.sinx", "sub.t2sin2pix",
/// "wave.exp", "wave.sin2pix_vel"); beta is ignored by single-order problems.
NamedProblem find_problem(const std::string& id, double alpha, double beta);

}  // namespace fracpde
