#ifndef MIMHD_RUNNER_HPP
#define MIMHD_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mimhd/scenarios.hpp"
#include "mimhd/time_integration.hpp"

namespace mimhd {

enum class SolverVariant { ec, es, ec_llf, std_dg };

SolverVariant parse_solver(const std::string& name);
std::string to_string(SolverVariant v);
KernelPair volume_kernels(SolverVariant v);
KernelPair surface_kernels(SolverVariant v);
std::string kernel_name(const KernelPair& k);

/// Resolved run configuration; unset optionals fall back to the scenario preset.
struct RunConfig {
    std::string scenario = "manufactured";
    std::optional<double> t_end;
    std::optional<double> alpha;
    std::optional<int> degree;
    std::optional<int> elements;
    SolverVariant solver = SolverVariant::es;
    bool glm = true;
    std::optional<double> nu;
    std::optional<double> cfl;
    std::string out_dir = "out";
    int diagnostics_every_steps = 0;
    double diagnostics_every_time = 0.0;
    int snapshot_every_steps = 0;
    std::uint64_t seed = 1;
};

/// Sections mirror the library modules: [scenarios], [sbp-basis-mesh], [dgsem], [time-integration], [cli-runner].
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

struct RunSetup {
    Scenario scenario;
    Semidiscretization sd;
    GridFunction u0;
    TimeLoopConfig loop;
};

RunSetup make_setup(const RunConfig& cfg);

/// Names of the conservative variables in layout order, e.g. rho1, rho1_v1, E1, B1, psi.
std::vector<std::string> variable_names(int n_species);

struct SingleRunOutcome {
    int exit_code = 0;
    bool aborted = false;
    double t_final = 0.0;
    long steps = 0;
    std::string abort_cause;
    DiagnosticsSeries series;
};

/// Run one configuration, writing diagnostics.csv, snapshot_<step>.csv and run_meta.json into out_dir.
SingleRunOutcome run_single(const RunConfig& cfg);

struct ConvergenceTable {
    std::vector<int> elements;
    std::vector<std::string> variables;
    std::vector<std::vector<double>> errors; // [resolution][variable], root-mean-square on the analysis grid
    std::vector<std::vector<double>> l2_collocation;
    std::vector<double> divB_l2; // root-mean-square broken divergence
    double mean_eoc(std::size_t variable) const;
};

/// Runs the scenario at each resolution and writes errors.csv into out_dir.
ConvergenceTable run_convergence(const RunConfig& cfg, const std::vector<int>& elements);

struct EntropyStudyRow {
    double cfl = 0.0;
    double delta_S = 0.0;
    double max_rate = 0.0; // max over samples of abs(dS/dt)
    double S0 = 0.0;
    long steps = 0;
};

struct EntropyStudy {
    std::vector<EntropyStudyRow> rows;
    double slope = 0.0; // least-squares slope of log|delta_S| against log CFL
};

/// Runs the scenario for each CFL and writes entropy_study.csv into out_dir.
EntropyStudy run_entropy_study(const RunConfig& cfg, const std::vector<double>& cfls);

/// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Writes text to path through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& text);

std::string version_string();

} // namespace mimhd

#endif
