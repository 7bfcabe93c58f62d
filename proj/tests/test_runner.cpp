#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mimhd/runner.hpp"
#include "mimhd/verify.hpp"

using namespace mimhd;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("mimhd_test_runner_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const fs::path& p) {
    std::vector<std::string> out;
    std::ifstream in(p);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

int count_snapshots(const fs::path& dir) {
    int n = 0;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().filename().string().rfind("snapshot_", 0) == 0) ++n;
    return n;
}

} // namespace

TEST_CASE("config parsing") {
    const RunConfig c = parse_config(R"(
[scenarios]
name = weak_blast
t_end = 0.3
alpha = 0.2

[sbp-basis-mesh]
degree = 4
elements = 6

[dgsem]
solver = ec_llf

[time-integration]
glm = false
nu = 0.7
cfl = 0.25

[cli-runner]
out = somewhere
diagnostics_every_steps = 5
snapshot_every_steps = 50
seed = 42
)");
    CHECK(c.scenario == "weak_blast");
    CHECK(*c.t_end == 0.3);
    CHECK(*c.alpha == 0.2);
    CHECK(*c.degree == 4);
    CHECK(*c.elements == 6);
    CHECK(c.solver == SolverVariant::ec_llf);
    CHECK_FALSE(c.glm);
    CHECK(*c.nu == 0.7);
    CHECK(*c.cfl == 0.25);
    CHECK(c.out_dir == "somewhere");
    CHECK(c.diagnostics_every_steps == 5);
    CHECK(c.snapshot_every_steps == 50);
    CHECK(c.seed == 42);

    const RunConfig d = parse_config("[scenarios]\nname = khi\n");
    CHECK_FALSE(d.t_end.has_value());
    CHECK(d.solver == SolverVariant::es);
    CHECK(d.glm);
}

TEST_CASE("config rejects bad input") {
    CHECK_THROWS_AS(parse_config("[scenarios]\nname = khi\ncolour = red\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[nowhere]\nx = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[scenarios]\nname = vortex\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[time-integration]\ncfl = 1.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[time-integration]\ncfl = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[time-integration]\nnu = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[time-integration]\nglm = maybe\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[sbp-basis-mesh]\ndegree = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[sbp-basis-mesh]\ndegree = 16\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[sbp-basis-mesh]\nelements = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[sbp-basis-mesh]\nelements = two\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[dgsem]\nsolver = upwind\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[scenarios]\nt_end = -1\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/mimhd.ini"), ConfigError);
}

TEST_CASE("solver variants map to kernel pairs") {
    for (auto v : {SolverVariant::ec, SolverVariant::es, SolverVariant::ec_llf, SolverVariant::std_dg})
        CHECK(parse_solver(to_string(v)) == v);
    CHECK(kernel_name(volume_kernels(SolverVariant::es)) == kernel_name(kEcKernels));
    CHECK(kernel_name(surface_kernels(SolverVariant::ec)) == kernel_name(kEcKernels));
    CHECK(kernel_name(surface_kernels(SolverVariant::es)) == kernel_name(kEsKernels));
    CHECK(kernel_name(surface_kernels(SolverVariant::ec_llf)) == kernel_name(kLlfKernels));
    CHECK(kernel_name(volume_kernels(SolverVariant::std_dg)) == kernel_name(kCentralKernels));
    CHECK(kernel_name(surface_kernels(SolverVariant::std_dg)) == kernel_name(kLlfKernels));
}

TEST_CASE("variable names follow the layout") {
    const auto n = variable_names(2);
    REQUIRE(n.size() == 14);
    CHECK(n[0] == "rho1");
    CHECK(n[1] == "rho1_v1");
    CHECK(n[3] == "rho1_v3");
    CHECK(n[4] == "E1");
    CHECK(n[5] == "rho2");
    CHECK(n[10] == "B1");
    CHECK(n[13] == "psi");
}

TEST_CASE("log-log slope") {
    CHECK(loglog_slope({1.0, 2.0, 4.0}, {3.0, 48.0, 768.0}) == doctest::Approx(4.0));
    CHECK(loglog_slope({0.5, 0.25}, {-1e-3, -1e-3 / 32.0}) == doctest::Approx(5.0));
    CHECK_THROWS_AS(loglog_slope({1.0, 2.0}, {0.0, 1.0}), ZeroError);
}

TEST_CASE("atomic write creates directories and replaces content") {
    const fs::path dir = scratch("atomic");
    const fs::path f = dir / "a" / "b.txt";
    write_file_atomic(f.string(), "one");
    CHECK(slurp(f) == "one");
    write_file_atomic(f.string(), "two");
    CHECK(slurp(f) == "two");
    CHECK_FALSE(fs::exists(f.string() + ".tmp"));
    fs::remove_all(dir);
}

TEST_CASE("setup applies overrides") {
    RunConfig c;
    c.scenario = "weak_blast";
    c.degree = 2;
    c.elements = 5;
    c.cfl = 0.3;
    c.t_end = 0.05;
    c.solver = SolverVariant::ec;
    const RunSetup s = make_setup(c);
    CHECK(s.sd.basis().degree == 2);
    CHECK(s.sd.mesh().n_elements == 5);
    CHECK(s.loop.cfl == 0.3);
    CHECK(s.loop.t_end == 0.05);
    CHECK(s.u0.cols() == 25 * 9);
    CHECK(kernel_name(s.sd.surface_kernels()) == kernel_name(kEcKernels));
}

TEST_CASE("zero-length run writes one snapshot and metadata") {
    const fs::path dir = scratch("zero");
    RunConfig c;
    c.scenario = "manufactured";
    c.elements = 2;
    c.t_end = 0.0;
    c.out_dir = dir.string();
    const SingleRunOutcome r = run_single(c);
    CHECK(r.exit_code == 0);
    CHECK_FALSE(r.aborted);
    CHECK(count_snapshots(dir) == 1);

    const auto diag = lines(dir / "diagnostics.csv");
    REQUIRE(diag.size() == 2);
    CHECK(diag[0].rfind("t,dt,S_total,dS_dt,divB_L2", 0) == 0);

    const auto snap = lines(dir / "snapshot_0.csv");
    CHECK(snap[0].rfind("element,i,j,x,y,rho1", 0) == 0);
    CHECK(snap.size() == 1 + 4 * 16);

    const auto meta = nlohmann::json::parse(slurp(dir / "run_meta.json"));
    CHECK(meta["status"]["state"] == "completed");
    CHECK(meta["config"]["solver"] == "es");
    CHECK(meta["config"]["elements_per_direction"] == 2);
    CHECK(meta.contains("version"));
    fs::remove_all(dir);
}

TEST_CASE("lost admissibility aborts with exit code 2") {
    const fs::path dir = scratch("abort");
    RunConfig c;
    c.scenario = "weak_blast";
    c.degree = 7;
    c.elements = 2;
    c.solver = SolverVariant::std_dg;
    c.glm = false;
    c.cfl = 1.0;
    c.t_end = 2.0;
    c.out_dir = dir.string();
    const SingleRunOutcome r = run_single(c);
    CHECK(r.exit_code == 2);
    CHECK(r.aborted);
    CHECK(r.abort_cause.find("admissibility") != std::string::npos);
    const auto meta = nlohmann::json::parse(slurp(dir / "run_meta.json"));
    CHECK(meta["status"]["state"] == "aborted");
    CHECK(meta["status"].contains("abort_time"));
    CHECK(count_snapshots(dir) >= 1);
    fs::remove_all(dir);
}

TEST_CASE("short run samples at the requested cadence") {
    const fs::path dir = scratch("cadence");
    RunConfig c;
    c.scenario = "weak_blast";
    c.elements = 4;
    c.t_end = 0.05;
    c.diagnostics_every_steps = 1;
    c.snapshot_every_steps = 1000;
    c.out_dir = dir.string();
    const SingleRunOutcome r = run_single(c);
    CHECK(r.exit_code == 0);
    CHECK(r.t_final == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(r.series.size() == static_cast<std::size_t>(r.steps + 1));
    CHECK(lines(dir / "diagnostics.csv").size() == r.series.size() + 1);
    CHECK(count_snapshots(dir) == 2);
    fs::remove_all(dir);
}

TEST_CASE("convergence table on a small case") {
    const fs::path dir = scratch("conv");
    RunConfig c;
    c.scenario = "manufactured";
    c.degree = 2;
    c.t_end = 0.1;
    c.out_dir = dir.string();
    const ConvergenceTable t = run_convergence(c, {4, 8});
    REQUIRE(t.errors.size() == 2);
    CHECK(t.variables.size() == 14);
    for (std::size_t v = 0; v < t.variables.size(); ++v) {
        CHECK(t.errors[1][v] < t.errors[0][v]);
        CHECK(t.mean_eoc(v) > 1.5);
    }
    CHECK(t.divB_l2.size() == 2);
    const auto rows = lines(dir / "errors.csv");
    CHECK(rows[0] == "elements,variable,error,eoc,l2_collocation");
    // two resolutions and one mean row per variable, divB included
    CHECK(rows.size() == 1 + 3 * 15);
    fs::remove_all(dir);
}

TEST_CASE("entropy study writes one row per CFL and a slope") {
    const fs::path dir = scratch("entropy");
    RunConfig c;
    c.scenario = "weak_blast";
    c.solver = SolverVariant::ec;
    c.elements = 4;
    c.t_end = 0.05;
    c.out_dir = dir.string();
    const EntropyStudy s = run_entropy_study(c, {0.5, 0.25});
    REQUIRE(s.rows.size() == 2);
    CHECK(s.rows[1].steps > s.rows[0].steps);
    CHECK(std::isfinite(s.slope));
    CHECK(s.rows[0].max_rate < 1e-10);
    const auto rows = lines(dir / "entropy_study.csv");
    CHECK(rows[0] == "cfl,delta_S,max_abs_dS_dt,S0,steps");
    CHECK(rows.size() == 4);
    fs::remove_all(dir);
}

TEST_CASE("property checks are deterministic in the seed") {
    const auto a = verify_all(7, 50);
    const auto b = verify_all(7, 50);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].pass);
        CHECK(a[i].worst == b[i].worst);
    }
    for (const auto& p : verify_all(7, 0)) CHECK(p.pass);
}

TEST_CASE("version string") { CHECK_FALSE(version_string().empty()); }
