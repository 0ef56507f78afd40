#include "fracpde/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fracpde/analysis.hpp"
#include "fracpde/output.hpp"

namespace fracpde::cli {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const char* where) {
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key))
            throw std::invalid_argument(std::string("unknown config key '") + key + "' in " + where);
}

void validate(const RunConfig& c) {
    if (c.axis != "temporal" && c.axis != "spatial")
        throw std::invalid_argument("axis must be 'temporal' or 'spatial', got '" + c.axis + "'");
    if (c.format != "csv" && c.format != "json")
        throw std::invalid_argument("format must be 'csv' or 'json', got '" + c.format + "'");
}

void write_result(const RunConfig& c, const std::function<void(std::ostream&)>& writer) {
    if (c.out_path.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream f(c.out_path);
    if (!f) throw std::invalid_argument("cannot write output file '" + c.out_path + "'");
    writer(f);
}

int run_solve(const RunConfig& c) {
    const NamedProblem prob = find_problem(c.problem_id, c.alpha, c.beta);
    const Grid grid(c.M, c.N, prob.domain_length(), prob.final_time());
    const SolutionHistory hist = solve_named(prob, grid);
    std::optional<ErrorReport> report;
    if (prob.has_exact()) report = error_report(hist, prob.exact());
    write_result(c, [&](std::ostream& os) {
        c.format == "csv" ? write_solve_csv(hist, report, os) : write_solve_json(hist, report, os);
    });
    if (!c.plot_path.empty()) emit_heatmap_svg(hist, c.plot_path);
    return exit_ok;
}

int run_rates(const RunConfig& c) {
    const NamedProblem prob = find_problem(c.problem_id, c.alpha, c.beta);
    const bool temporal = c.axis == "temporal";
    std::vector<int> steps = c.steps;
    if (steps.empty()) steps = temporal ? std::vector<int>{5, 10, 20, 40, 80, 160}
                                        : std::vector<int>{4, 8, 16, 32};
    const RateTable table = temporal ? temporal_rate_study(prob, c.M, steps)
                                     : spatial_rate_study(prob, c.N, steps);
    write_result(c, [&](std::ostream& os) {
        c.format == "csv" ? write_rate_csv(table, os) : write_rate_json(table, os);
    });
    if (!c.plot_path.empty()) emit_rate_svg(table, c.plot_path);
    return exit_ok;
}

Field random_interior_field(std::mt19937& rng, int M, double amplitude) {
    std::uniform_real_distribution<double> dist(-amplitude, amplitude);
    Field rho(static_cast<size_t>(M) + 1, 0.0);
    for (int i = 1; i < M; ++i) rho[i] = dist(rng);
    return rho;
}

int run_verify() {
    bool all_ok = true;
    const auto item = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "pass  " : "FAIL  ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        all_ok = all_ok && ok;
    };
    const std::vector<double> order_sweep{0.3, 0.5, 0.7};

    {
        // Partial sums of the derivative weights against the closed form
        // S_n = S_{n-1} (1 - alpha/n).
        double worst = 0.0;
        for (double a : {0.1, 0.35, 0.5, 0.75, 0.9}) {
            const WeightSequence g = grunwald_derivative_weights(FracOrder(a), 500);
            double running = 0.0, closed = 1.0;
            for (int n = 0; n <= 500; ++n) {
                running += g.values[n];
                if (n > 0) closed *= 1.0 - a / n;
                worst = std::max(worst, std::abs(running - closed) / closed);
            }
        }
        item("weights/partial-sum-identity", worst <= 1e-12,
             "max rel dev " + format_scientific(worst));
    }
    {
        double worst = 0.0;
        for (double a : {0.1, 0.35, 0.5, 0.75, 0.9}) {
            const WeightSequence g = grunwald_derivative_weights(FracOrder(a), 100);
            const WeightSequence w = grunwald_integral_weights(FracOrder(a), 100);
            double gp = 1.0, wp = 1.0;
            for (int k = 1; k <= 100; ++k) {
                gp *= -(a - k + 1.0) / k;
                wp *= (a + k - 1.0) / k;
                worst = std::max(worst, std::abs(g.values[k] - gp) / std::abs(gp));
                worst = std::max(worst, std::abs(w.values[k] - wp) / std::abs(wp));
            }
        }
        item("weights/recurrence-vs-product", worst <= 1e-13,
             "max rel dev " + format_scientific(worst));
    }
    {
        double min_value = 1e300;
        for (int ia = 0; ia < 10; ++ia) {
            const FracOrder a(0.05 + 0.1 * ia);
            for (int j = 0; j < 2048; ++j) {
                min_value = std::min(min_value, gen_fn_subdiffusion(a, M_PI * j / 2047.0));
                min_value = std::min(min_value, gen_fn_wave(a, M_PI * (j + 1) / 2048.0));
            }
        }
        item("weights/generating-fns-nonnegative", min_value >= -1e-12,
             "min value " + format_scientific(min_value));
    }
    {
        double min_eig = 1e300;
        for (int ia = 0; ia < 10; ++ia) {
            const FracOrder a(0.05 + 0.1 * ia);
            for (int k : {1, 2, 10, 50, 200}) {
                min_eig = std::min(min_eig,
                                   toeplitz_psd_check(WeightKind::LambdaSubdiffusion, a, k).min_eigenvalue);
                min_eig = std::min(min_eig,
                                   toeplitz_psd_check(WeightKind::LambdaWave, a, k).min_eigenvalue);
            }
        }
        item("weights/toeplitz-psd-sweep", min_eig >= -1e-10,
             "min eigenvalue " + format_scientific(min_eig));
    }
    {
        std::vector<double> taus;
        for (int e = 4; e <= 9; ++e) taus.push_back(std::pow(2.0, -e));
        double worst_gap = 0.0;
        for (OperatorKind kind : {OperatorKind::Derivative, OperatorKind::Integral})
            for (const ShiftPair shifts : {ShiftPair(0, -1), ShiftPair(1, 0)})
                for (double a : order_sweep) {
                    const double order =
                        observed_order(operator_order_check(kind, FracOrder(a), shifts, 4, taus));
                    worst_gap = std::max(worst_gap, std::abs(order - 2.0));
                }
        item("operators/second-order", worst_gap <= 0.2,
             "worst |order-2| " + format_scientific(worst_gap));
    }
    {
        std::mt19937 rng(20240601);
        const NamedProblem prob = find_problem("sub.sinx", 0.35, 0.05);
        const Grid grid(50, 50, 1.0, 1.0);
        bool ok = true;
        double worst_ratio = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const Field rho = random_interior_field(rng, grid.M, 1e-3);
            const StabilityResult r = stability_experiment(*prob.sub, grid, rho);
            ok = ok && r.pass;
            worst_ratio = std::max(worst_ratio, r.observed_deviation / r.bound);
        }
        item("stability/subdiffusion", ok,
             "worst dev/bound " + format_scientific(worst_ratio));
    }
    {
        std::mt19937 rng(20240602);
        const NamedProblem prob = find_problem("wave.sin2pix_vel", 0.5, 0.5);
        const Grid grid(50, 50, 1.0, 1.0);
        bool ok = true;
        double worst_ratio = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const Field rho = random_interior_field(rng, grid.M, 1e-3);
            const Field rho_tilde = random_interior_field(rng, grid.M, 1e-3);
            const StabilityResult r = stability_experiment(*prob.wave, grid, rho, rho_tilde);
            ok = ok && r.pass;
            worst_ratio = std::max(worst_ratio, r.observed_deviation / r.bound);
        }
        item("stability/wave", ok, "worst dev/bound " + format_scientific(worst_ratio));
    }

    std::cout << (all_ok ? "verification passed" : "verification FAILED") << "\n";
    return all_ok ? exit_ok : exit_verification_failure;
}

}  // namespace

RunConfig load_config(const std::string& json_path) {
    std::ifstream f(json_path);
    if (!f) throw std::invalid_argument("cannot read config file '" + json_path + "'");
    const json j = json::parse(f);
    reject_unknown_keys(j, {"problem", "alpha", "beta", "grid", "refine", "output"}, "config");

    RunConfig c;
    c.problem_id = j.value("problem", c.problem_id);
    c.alpha = j.value("alpha", c.alpha);
    c.beta = j.value("beta", c.beta);
    if (j.contains("grid")) {
        reject_unknown_keys(j.at("grid"), {"M", "N"}, "config.grid");
        c.M = j.at("grid").value("M", c.M);
        c.N = j.at("grid").value("N", c.N);
    }
    if (j.contains("refine")) {
        reject_unknown_keys(j.at("refine"), {"axis", "steps"}, "config.refine");
        c.axis = j.at("refine").value("axis", c.axis);
        if (j.at("refine").contains("steps"))
            c.steps = j.at("refine").at("steps").get<std::vector<int>>();
    }
    if (j.contains("output")) {
        reject_unknown_keys(j.at("output"), {"format", "path", "plot"}, "config.output");
        c.format = j.at("output").value("format", c.format);
        c.out_path = j.at("output").value("path", c.out_path);
        c.plot_path = j.at("output").value("plot", c.plot_path);
    }
    validate(c);
    return c;
}

int run(const RunConfig& config) {
    validate(config);
    switch (config.command) {
        case Command::Solve: return run_solve(config);
        case Command::Rates: return run_rates(config);
        case Command::Verify: return run_verify();
    }
    throw std::invalid_argument("unknown command");
}

int run_main(int argc, const char* const* argv) {
    CLI::App app{"compact finite-difference schemes for time-fractional diffusion problems"};
    app.require_subcommand(1);

    std::string config_path, problem, axis, format, out_path, plot_path;
    double alpha = 0.0, beta = 0.0;
    int m = 0, n = 0;
    std::vector<int> steps;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--problem", problem, "problem id");
        sub->add_option("--alpha", alpha, "first fractional order");
        sub->add_option("--beta", beta, "second fractional order");
        sub->add_option("--M", m, "spatial intervals (fixed size for temporal rate studies)");
        sub->add_option("--N", n, "time steps (fixed count for spatial rate studies)");
        sub->add_option("--axis", axis, "rate-study axis")
            ->check(CLI::IsMember({"temporal", "spatial"}));
        sub->add_option("--steps", steps, "rate-study refinement counts")->delimiter(',');
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--plot", plot_path, "SVG plot file");
        return sub;
    };
    CLI::App* cmd_solve = add_common(app.add_subcommand("solve", "run one solve"));
    CLI::App* cmd_rates = add_common(app.add_subcommand("rates", "run a refinement study"));
    add_common(app.add_subcommand("verify", "run the verification suite"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config_error;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        RunConfig cfg;
        if (sub->count("--config") > 0) cfg = load_config(config_path);
        cfg.command = sub == cmd_solve ? Command::Solve
                      : sub == cmd_rates ? Command::Rates
                                         : Command::Verify;
        if (sub->count("--problem") > 0) cfg.problem_id = problem;
        if (sub->count("--alpha") > 0) cfg.alpha = alpha;
        if (sub->count("--beta") > 0) cfg.beta = beta;
        if (sub->count("--M") > 0) cfg.M = m;
        if (sub->count("--N") > 0) cfg.N = n;
        if (sub->count("--axis") > 0) cfg.axis = axis;
        if (sub->count("--steps") > 0) cfg.steps = steps;
        if (sub->count("--format") > 0) cfg.format = format;
        if (sub->count("--out") > 0) cfg.out_path = out_path;
        if (sub->count("--plot") > 0) cfg.plot_path = plot_path;
        return run(cfg);
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical_failure;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    }
}

}  // namespace fracpde::cli
