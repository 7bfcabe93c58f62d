#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mimhd/runner.hpp"
#include "mimhd/verify.hpp"

using namespace mimhd;

namespace {

RunConfig load(const std::string& path, const std::string& out) {
    RunConfig cfg = load_config(path);
    if (!out.empty()) cfg.out_dir = out;
    return cfg;
}

void print_samples(const SingleRunOutcome& o) {
    if (o.series.empty()) return;
    const auto& s = o.series.back();
    std::printf("t = %.6g  steps = %ld  S = %.12e  dS/dt = %.3e  divB_L2 = %.3e\n", s.t, o.steps, s.entropy,
                s.entropy_rate, s.divB_l2);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy-stable DGSEM solver for multi-ion MHD"};
    app.require_subcommand(1);
    bool serial = false;
    std::string out;
    app.add_flag("--serial", serial, "deterministic serial evaluation (the only mode; accepted for scripts)");
    app.add_option("--out", out, "output directory, overrides the config");
    app.set_version_flag("--version", version_string());

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "single run");
    run_cmd->add_option("config", config_path, "INI config")->required()->check(CLI::ExistingFile);

    std::vector<int> elements;
    auto* conv_cmd = app.add_subcommand("converge", "convergence study against the exact solution");
    conv_cmd->add_option("config", config_path, "INI config")->required()->check(CLI::ExistingFile);
    conv_cmd->add_option("--elements", elements, "elements per direction")->delimiter(',')->required();

    std::vector<double> cfls;
    auto* ent_cmd = app.add_subcommand("entropy", "total entropy change against CFL");
    ent_cmd->add_option("config", config_path, "INI config")->required()->check(CLI::ExistingFile);
    ent_cmd->add_option("--cfl", cfls, "CFL numbers")->delimiter(',')->required();

    std::uint64_t seed = 1;
    long samples = 1000;
    auto* ver_cmd = app.add_subcommand("verify", "randomized property checks of the kernels and operators");
    ver_cmd->add_option("--seed", seed, "RNG seed");
    ver_cmd->add_option("--samples", samples, "random samples per property")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run_cmd) {
            const SingleRunOutcome o = run_single(load(config_path, out));
            print_samples(o);
            if (o.aborted) std::fprintf(stderr, "aborted at t = %.6g: %s\n", o.t_final, o.abort_cause.c_str());
            return o.exit_code;
        }
        if (*conv_cmd) {
            const ConvergenceTable t = run_convergence(load(config_path, out), elements);
            for (std::size_t v = 0; v < t.variables.size(); ++v) {
                std::printf("%-10s", t.variables[v].c_str());
                for (const auto& row : t.errors) std::printf("  %.3e", row[v]);
                if (t.elements.size() > 1) std::printf("  mean EOC %.2f", t.mean_eoc(v));
                std::printf("\n");
            }
            return 0;
        }
        if (*ent_cmd) {
            const EntropyStudy s = run_entropy_study(load(config_path, out), cfls);
            for (const auto& r : s.rows)
                std::printf("cfl %-8g dS %.6e  max|dS/dt| %.3e\n", r.cfl, r.delta_S, r.max_rate);
            std::printf("slope %.3f\n", s.slope);
            return 0;
        }
        if (*ver_cmd) {
            if (samples == 0) std::fprintf(stderr, "warning: 0 samples, random properties pass vacuously\n");
            bool ok = true;
            for (const auto& r : verify_all(seed, samples)) {
                std::printf("%-4s %-24s worst %.3e  tol %.1e  samples %ld\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                            r.worst, r.tolerance, r.samples);
                ok = ok && r.pass;
            }
            return ok ? 0 : 1;
        }
    } catch (const SimulationAborted& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
