#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mimhd/runner.hpp"

#ifndef MIMHD_VERSION
#define MIMHD_VERSION "0.1.0"
#endif

namespace mimhd {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string version_string() { return MIMHD_VERSION; }

void write_file_atomic(const std::string& path, const std::string& text) {
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp.string() + "'");
        out << text;
        if (!out) throw Error("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

std::vector<std::string> variable_names(int n_species) {
    std::vector<std::string> names;
    for (int k = 1; k <= n_species; ++k) {
        const std::string s = std::to_string(k);
        names.push_back("rho" + s);
        for (int m = 1; m <= 3; ++m) names.push_back("rho" + s + "_v" + std::to_string(m));
        names.push_back("E" + s);
    }
    names.insert(names.end(), {"B1", "B2", "B3", "psi"});
    return names;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw Error("loglog_slope needs at least two matching points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(std::abs(y[i]) > 0.0)) throw ZeroError("loglog_slope: non-positive or zero entry");
        const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double ConvergenceTable::mean_eoc(std::size_t variable) const {
    std::vector<double> e;
    for (const auto& row : errors) e.push_back(row.at(variable));
    return mean(eoc(e));
}

RunSetup make_setup(const RunConfig& cfg) {
    Scenario sc = scenario_by_name(cfg.scenario);
    if (cfg.alpha) sc.species.electron_pressure_alpha = *cfg.alpha;
    if (cfg.degree) sc.degree = *cfg.degree;
    if (cfg.elements) sc.elements = *cfg.elements;
    if (cfg.t_end) sc.t_end = *cfg.t_end;
    if (cfg.cfl) sc.cfl = *cfg.cfl;
    if (cfg.nu) sc.nu = *cfg.nu;
    sc.species.validate();

    CartesianMesh mesh = build_mesh(sc.dim, sc.lo, sc.hi, sc.elements, sc.boundary);
    LGLBasis basis = lgl_basis(sc.degree);
    Semidiscretization sd(mesh, basis, sc.species, volume_kernels(cfg.solver), surface_kernels(cfg.solver),
                          GlmSettings{cfg.glm, 0.0}, sc.source);
    GridFunction u0 = sd.interpolate(sc.initial);

    TimeLoopConfig loop;
    loop.cfl = sc.cfl;
    loop.t_end = sc.t_end;
    loop.nu = sc.nu;
    loop.sample_every_steps = cfg.diagnostics_every_steps;
    loop.sample_every_time = cfg.diagnostics_every_time;
    if (loop.sample_every_steps <= 0 && loop.sample_every_time <= 0.0) loop.sample_every_steps = 1;
    return RunSetup{std::move(sc), std::move(sd), std::move(u0), loop};
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string diagnostics_csv(const std::vector<DiagnosticsSample>& samples) {
    std::string out = "t,dt,S_total,dS_dt,divB_L2,divB_Linf,Bp2_norm,momentum_x,momentum_y,momentum_z,energy_total\n";
    for (const auto& s : samples) {
        out += fmt(s.t) + "," + fmt(s.dt) + "," + fmt(s.entropy) + "," + fmt(s.entropy_rate) + "," + fmt(s.divB_l2) +
               "," + fmt(s.divB_linf) + "," + fmt(s.poloidal) + "," + fmt(s.momentum(0)) + "," + fmt(s.momentum(1)) +
               "," + fmt(s.momentum(2)) + "," + fmt(s.energy) + "\n";
    }
    return out;
}

std::string snapshot_csv(const GridFunction& u, const Semidiscretization& sd) {
    const auto names = variable_names(sd.species().n_species);
    std::string out = "element,i,j,x,y";
    for (const auto& n : names) out += "," + n;
    out += "\n";
    const int n = sd.basis().n_nodes();
    const int nj = sd.mesh().dim == 1 ? 1 : n;
    for (int e = 0; e < sd.mesh().total_elements(); ++e)
        for (int j = 0; j < nj; ++j)
            for (int i = 0; i < n; ++i) {
                const int c = sd.node_index(e, i, j);
                out += std::to_string(e) + "," + std::to_string(i) + "," + std::to_string(j) + "," +
                       fmt(sd.node_x(e, i)) + "," + fmt(sd.node_y(e, j));
                for (Eigen::Index v = 0; v < u.rows(); ++v) out += "," + fmt(u(v, c));
                out += "\n";
            }
    return out;
}

json resolved_config(const RunConfig& cfg, const RunSetup& setup) {
    const Scenario& sc = setup.scenario;
    const SpeciesTable& sp = sc.species;
    json species = json::array();
    for (int k = 0; k < sp.n_species; ++k) species.push_back({{"gamma", sp.g(k)}, {"charge_to_mass", sp.r(k)}});
    json boundary = json::array();
    for (auto b : sc.boundary) boundary.push_back(to_string(b));
    return {
        {"scenario", sc.name},
        {"species", species},
        {"electron_pressure_alpha", sp.electron_pressure_alpha},
        {"dim", sc.dim},
        {"domain", {{"lo", sc.lo}, {"hi", sc.hi}}},
        {"boundary", boundary},
        {"degree", sc.degree},
        {"elements_per_direction", sc.elements},
        {"solver", to_string(cfg.solver)},
        {"kernels",
         {{"volume", kernel_name(setup.sd.volume_kernels())}, {"surface", kernel_name(setup.sd.surface_kernels())}}},
        {"glm", {{"enabled", cfg.glm}, {"nu", sc.nu}}},
        {"cfl", sc.cfl},
        {"t_end", sc.t_end},
        {"output",
         {{"directory", cfg.out_dir},
          {"diagnostics_every_steps", setup.loop.sample_every_steps},
          {"diagnostics_every_time", setup.loop.sample_every_time},
          {"snapshot_every_steps", cfg.snapshot_every_steps}}},
        {"seed", cfg.seed},
        {"definitions",
         {{"lambda",
           "per node: max over species k and directions d of |v_k,d| + c_f,k,d, fast speed from the species sound "
           "speed and b = B/sqrt(rho_total); interfaces use the max of both sides"},
          {"dt", "min over nodes of cfl/(N+1) * h / lambda"},
          {"c_h", "nu/dt_cfl * cfl * h/(2(N+1)), fixed for the whole step; 0 when glm is disabled"}}},
    };
}

} // namespace

SingleRunOutcome run_single(const RunConfig& cfg) {
    RunSetup setup = make_setup(cfg);
    fs::create_directories(cfg.out_dir);
    const fs::path dir(cfg.out_dir);
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("snapshot_", 0) == 0 && entry.path().extension() == ".csv") fs::remove(entry.path());
    }

    SingleRunOutcome outcome;
    std::vector<DiagnosticsSample> samples;
    long last_snapshot = -1;
    auto snapshot = [&](long step, const GridFunction& u) {
        write_file_atomic((dir / ("snapshot_" + std::to_string(step) + ".csv")).string(), snapshot_csv(u, setup.sd));
        last_snapshot = step;
    };

    RunObserver obs;
    obs.on_sample = [&](const DiagnosticsSample& s) { samples.push_back(s); };
    GridFunction latest;
    long latest_step = 0;
    obs.on_step = [&](long step, double, const GridFunction& u) {
        latest_step = step;
        if (step == 0 || (cfg.snapshot_every_steps > 0 && step % cfg.snapshot_every_steps == 0)) {
            snapshot(step, u);
            write_file_atomic((dir / "diagnostics.csv").string(), diagnostics_csv(samples));
        }
        latest = u;
    };

    const auto wall0 = std::chrono::steady_clock::now();
    json status;
    try {
        RunResult res = run(setup.u0, setup.sd, setup.loop, obs);
        if (last_snapshot != res.steps) snapshot(res.steps, res.u);
        if (samples.empty()) {
            setup.sd.set_cleaning_speed(compute_ch(compute_dt(res.u, setup.sd, setup.loop), setup.sd, setup.loop));
            const double ref = setup.sd.mesh().dim == 2 ? poloidal_integral(res.u, setup.sd) : 0.0;
            samples.push_back(make_sample(res.u, setup.sd.rhs(res.u, res.t), res.t, 0.0, setup.sd, ref));
        }
        outcome.t_final = res.t;
        outcome.steps = res.steps;
        status = {{"state", "completed"}, {"t_final", res.t}, {"steps", res.steps}};
    } catch (const SimulationAborted& err) {
        outcome.exit_code = 2;
        outcome.aborted = true;
        outcome.t_final = err.time();
        outcome.steps = err.step();
        outcome.abort_cause = err.cause();
        if (latest.size() > 0 && last_snapshot != latest_step) snapshot(latest_step, latest);
        status = {{"state", "aborted"},
                  {"abort_time", err.time()},
                  {"abort_step", err.step()},
                  {"cause", err.cause()}};
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
    status["wall_seconds"] = wall;
    for (const auto& s : samples) outcome.series.push(s);

    write_file_atomic((dir / "diagnostics.csv").string(), diagnostics_csv(samples));
    json meta = {{"version", version_string()},
                 {"config", resolved_config(cfg, setup)},
                 {"status", status},
                 {"exit_code", outcome.exit_code}};
    write_file_atomic((dir / "run_meta.json").string(), meta.dump(2) + "\n");
    return outcome;
}

ConvergenceTable run_convergence(const RunConfig& cfg, const std::vector<int>& elements) {
    if (elements.empty()) throw ConfigError("convergence study needs at least one resolution");
    ConvergenceTable table;
    table.elements = elements;
    for (int ne : elements) {
        RunConfig c = cfg;
        c.elements = ne;
        RunSetup setup = make_setup(c);
        if (!setup.scenario.exact) throw ConfigError("scenario '" + setup.scenario.name + "' has no exact solution");
        if (table.variables.empty()) table.variables = variable_names(setup.scenario.species.n_species);
        TimeLoopConfig loop = setup.loop;
        loop.sample_every_steps = 0;
        loop.sample_every_time = 0.0;
        RunResult res = run(setup.u0, setup.sd, loop);
        table.errors.push_back(rms_error_interpolated(res.u, setup.scenario.exact, res.t, setup.sd));
        table.l2_collocation.push_back(l2_error(res.u, setup.scenario.exact, res.t, setup.sd));
        if (setup.sd.mesh().dim == 2) {
            const double area = (setup.scenario.hi[0] - setup.scenario.lo[0]) * (setup.scenario.hi[1] - setup.scenario.lo[1]);
            table.divB_l2.push_back(divergence_error(res.u, setup.sd).l2 / std::sqrt(area));
        } else {
            table.divB_l2.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto safe_eoc = [&](const std::vector<double>& e) {
        try {
            return eoc(e);
        } catch (const ZeroError&) {
            return std::vector<double>(e.size() > 0 ? e.size() - 1 : 0, nan);
        }
    };
    std::string out = "elements,variable,error,eoc,l2_collocation\n";
    std::vector<std::vector<double>> eocs;
    for (std::size_t v = 0; v < table.variables.size(); ++v) {
        std::vector<double> e;
        for (const auto& row : table.errors) e.push_back(row[v]);
        eocs.push_back(safe_eoc(e));
    }
    eocs.push_back(safe_eoc(table.divB_l2));
    for (std::size_t r = 0; r < elements.size(); ++r) {
        for (std::size_t v = 0; v <= table.variables.size(); ++v) {
            const bool div = v == table.variables.size();
            out += std::to_string(elements[r]) + "," + (div ? std::string("divB") : table.variables[v]) + "," +
                   fmt(div ? table.divB_l2[r] : table.errors[r][v]) + "," + (r == 0 ? "" : fmt(eocs[v][r - 1])) +
                   "," + (div ? "" : fmt(table.l2_collocation[r][v])) + "\n";
        }
    }
    if (elements.size() > 1) {
        for (std::size_t v = 0; v <= table.variables.size(); ++v) {
            const bool div = v == table.variables.size();
            out += std::string("mean,") + (div ? std::string("divB") : table.variables[v]) + ",," + fmt(mean(eocs[v])) +
                   ",\n";
        }
    }
    write_file_atomic((fs::path(cfg.out_dir) / "errors.csv").string(), out);
    return table;
}

EntropyStudy run_entropy_study(const RunConfig& cfg, const std::vector<double>& cfls) {
    if (cfls.empty()) throw ConfigError("entropy study needs at least one CFL number");
    EntropyStudy study;
    for (double cfl : cfls) {
        RunConfig c = cfg;
        c.cfl = cfl;
        c.diagnostics_every_steps = 1;
        c.diagnostics_every_time = 0.0;
        RunSetup setup = make_setup(c);
        RunResult res = run(setup.u0, setup.sd, setup.loop);
        const auto& s = res.series.samples();
        EntropyStudyRow row;
        row.cfl = cfl;
        row.S0 = s.front().entropy;
        row.delta_S = s.back().entropy - row.S0;
        row.steps = res.steps;
        for (const auto& x : s) row.max_rate = std::max(row.max_rate, std::abs(x.entropy_rate));
        study.rows.push_back(row);
    }
    std::vector<double> x, y;
    for (const auto& r : study.rows) {
        x.push_back(r.cfl);
        y.push_back(r.delta_S);
    }
    try {
        study.slope = study.rows.size() > 1 ? loglog_slope(x, y) : std::numeric_limits<double>::quiet_NaN();
    } catch (const ZeroError&) {
        study.slope = std::numeric_limits<double>::quiet_NaN();
    }
    std::string out = "cfl,delta_S,max_abs_dS_dt,S0,steps\n";
    for (const auto& r : study.rows)
        out += fmt(r.cfl) + "," + fmt(r.delta_S) + "," + fmt(r.max_rate) + "," + fmt(r.S0) + "," +
               std::to_string(r.steps) + "\n";
    out += "slope,," + fmt(study.slope) + ",,\n";
    write_file_atomic((fs::path(cfg.out_dir) / "entropy_study.csv").string(), out);
    return study;
}

} // namespace mimhd
