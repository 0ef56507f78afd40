#include "fracpde/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace fracpde {

namespace {

double gamma_fn(double x) { return std::exp(std::lgamma(x)); }

constexpr double two_pi = 2.0 * M_PI;

TimeFn zero_time_fn() {
    return [](double) { return 0.0; };
}

}  // namespace

bool NamedProblem::has_exact() const {
    const SpaceTimeFn& e = kind == ProblemKind::SubDiffusion ? sub->exact : wave->exact;
    return static_cast<bool>(e);
}

const SpaceTimeFn& NamedProblem::exact() const {
    return kind == ProblemKind::SubDiffusion ? sub->exact : wave->exact;
}

double NamedProblem::domain_length() const {
    return kind == ProblemKind::SubDiffusion ? sub->L : wave->L;
}

double NamedProblem::final_time() const {
    return kind == ProblemKind::SubDiffusion ? sub->T : wave->T;
}

NamedProblem make_sinx_subdiffusion(FracOrder alpha, FracOrder beta) {
    const double a = alpha.value(), b = beta.value();
    const double sigma = 3.0 - a - b;
    const double c_alpha = gamma_fn(4.0 - a - b) / gamma_fn(4.0 - 2.0 * a - b);
    const double c_beta = gamma_fn(4.0 - a - b) / gamma_fn(4.0 - a - 2.0 * b);

    SubDiffusionProblem p{
        alpha,
        beta,
        1.0,
        1.0,
        [=](double x, double t) {
            return std::sin(x) * (sigma * std::pow(t, sigma - 1.0) +
                                  c_alpha * std::pow(t, sigma - a) +
                                  c_beta * std::pow(t, sigma - b));
        },
        zero_time_fn(),
        [=](double t) { return std::sin(1.0) * std::pow(t, sigma); },
        {},
        [=](double x, double t) { return std::sin(x) * std::pow(t, sigma); },
    };
    return NamedProblem{"sub.sinx", ProblemKind::SubDiffusion, std::move(p), {}, {}};
}

NamedProblem make_t2sin2pix_subdiffusion(FracOrder alpha) {
    const double a = alpha.value();
    const double c_alpha = 8.0 * M_PI * M_PI / gamma_fn(3.0 - a);

    SubDiffusionProblem p{
        alpha,
        FracOrder(0.5),  // inert: kappa2 = 0
        1.0,
        0.0,
        [=](double x, double t) {
            return std::sin(two_pi * x) * (2.0 * t + c_alpha * std::pow(t, 2.0 - a));
        },
        zero_time_fn(),
        zero_time_fn(),
        {},
        [](double x, double t) { return t * t * std::sin(two_pi * x); },
    };
    return NamedProblem{"sub.t2sin2pix", ProblemKind::SubDiffusion, std::move(p), {}, {}};
}

NamedProblem make_exp_wave(FracOrder alpha) {
    const double a = alpha.value();
    const double c = gamma_fn(a + 3.0) / gamma_fn(2.0 * a + 3.0);

    WaveProblem p{
        a + 1.0,
        alpha,
        1.0,
        [](double) { return 0.0; },
        [=](double x, double t) {
            return std::exp(x) * ((a + 2.0) * std::pow(t, a + 1.0) - c * std::pow(t, 2.0 * a + 2.0));
        },
        [=](double t) { return std::pow(t, a + 2.0); },
        [=](double t) { return std::exp(1.0) * std::pow(t, a + 2.0); },
        {},
        [=](double x, double t) { return std::exp(x) * std::pow(t, a + 2.0); },
    };
    return NamedProblem{"wave.exp", ProblemKind::Wave, {}, std::move(p), {}};
}

NamedProblem make_sin2pix_wave_with_velocity(FracOrder alpha) {
    const double a = alpha.value();
    const double c = 4.0 * M_PI * M_PI * gamma_fn(a + 4.0) / gamma_fn(2.0 * a + 4.0);

    WaveProblem p{
        a + 1.0,
        alpha,
        1.0,
        [](double x) { return 0.1 * std::sin(two_pi * x); },
        [=](double x, double t) {
            return std::sin(two_pi * x) * ((a + 3.0) * std::pow(t, a + 2.0) + c * std::pow(t, 2.0 * a + 3.0));
        },
        zero_time_fn(),
        zero_time_fn(),
        {},
        nullptr,
    };
    return NamedProblem{"wave.sin2pix_vel", ProblemKind::Wave, {}, std::move(p),
                        Grid(400, 4000, 1.0, 1.0)};
}

std::vector<std::string> problem_ids() {
    return {"sub.sinx", "sub.t2sin2pix", "wave.exp", "wave.sin2pix_vel"};
}

NamedProblem find_problem(const std::string& id, double alpha, double beta) {
    if (id == "sub.sinx") return make_sinx_subdiffusion(FracOrder(alpha), FracOrder(beta));
    if (id == "sub.t2sin2pix") return make_t2sin2pix_subdiffusion(FracOrder(alpha));
    if (id == "wave.exp") return make_exp_wave(FracOrder(alpha));
    if (id == "wave.sin2pix_vel") return make_sin2pix_wave_with_velocity(FracOrder(alpha));
    std::string known;
    for (const std::string& p : problem_ids()) known += (known.empty() ? "" : ", ") + p;
    throw std::invalid_argument("unknown problem id '" + id + "'; known ids: " + known);
}

}  // namespace fracpde
