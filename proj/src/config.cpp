#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "mimhd/runner.hpp"

namespace mimhd {

namespace pt = boost::property_tree;

SolverVariant parse_solver(const std::string& name) {
    if (name == "ec") return SolverVariant::ec;
    if (name == "es") return SolverVariant::es;
    if (name == "ec_llf") return SolverVariant::ec_llf;
    if (name == "std_dg") return SolverVariant::std_dg;
    throw ConfigError("unknown solver '" + name + "' (expected ec, es, ec_llf or std_dg)");
}

std::string to_string(SolverVariant v) {
    switch (v) {
    case SolverVariant::ec: return "ec";
    case SolverVariant::es: return "es";
    case SolverVariant::ec_llf: return "ec_llf";
    case SolverVariant::std_dg: return "std_dg";
    }
    return "?";
}

KernelPair volume_kernels(SolverVariant v) { return v == SolverVariant::std_dg ? kCentralKernels : kEcKernels; }

KernelPair surface_kernels(SolverVariant v) {
    switch (v) {
    case SolverVariant::ec: return kEcKernels;
    case SolverVariant::es: return kEsKernels;
    case SolverVariant::ec_llf:
    case SolverVariant::std_dg: return kLlfKernels;
    }
    return kEcKernels;
}

std::string kernel_name(const KernelPair& k) {
    std::string f;
    switch (k.flux) {
    case FluxKind::ec: f = "flux_ec"; break;
    case FluxKind::es: f = "flux_es"; break;
    case FluxKind::llf: f = "flux_llf"; break;
    case FluxKind::central: f = "flux_central"; break;
    }
    return f + "+" + (k.noncons == NonconsKind::ec ? "noncons_ec" : "noncons_central");
}

namespace {

bool parse_bool(const std::string& key, std::string v) {
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("key '" + key + "' expects a boolean, got '" + v + "'");
}

template <typename T>
T parse_number(const std::string& key, const std::string& v) {
    std::istringstream in(v);
    T x{};
    in >> x;
    if (in.fail() || !(in >> std::ws).eof()) throw ConfigError("key '" + key + "' expects a number, got '" + v + "'");
    return x;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    pt::ptree tree;
    try {
        std::istringstream in(text);
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& err) {
        throw ConfigError(std::string("malformed config: ") + err.what());
    }
    RunConfig cfg;
    static const std::set<std::string> sections{"scenarios", "sbp-basis-mesh", "dgsem", "time-integration",
                                                "cli-runner"};
    for (const auto& [section, body] : tree) {
        if (!sections.count(section)) throw ConfigError("unknown section [" + section + "]");
        for (const auto& [key, node] : body) {
            const std::string full = section + "." + key;
            const std::string v = node.get_value<std::string>();
            if (full == "scenarios.name") cfg.scenario = v;
            else if (full == "scenarios.t_end") cfg.t_end = parse_number<double>(full, v);
            else if (full == "scenarios.alpha") cfg.alpha = parse_number<double>(full, v);
            else if (full == "sbp-basis-mesh.degree") cfg.degree = parse_number<int>(full, v);
            else if (full == "sbp-basis-mesh.elements") cfg.elements = parse_number<int>(full, v);
            else if (full == "dgsem.solver") cfg.solver = parse_solver(v);
            else if (full == "time-integration.glm") cfg.glm = parse_bool(full, v);
            else if (full == "time-integration.nu") cfg.nu = parse_number<double>(full, v);
            else if (full == "time-integration.cfl") cfg.cfl = parse_number<double>(full, v);
            else if (full == "cli-runner.out") cfg.out_dir = v;
            else if (full == "cli-runner.diagnostics_every_steps")
                cfg.diagnostics_every_steps = parse_number<int>(full, v);
            else if (full == "cli-runner.diagnostics_every_time")
                cfg.diagnostics_every_time = parse_number<double>(full, v);
            else if (full == "cli-runner.snapshot_every_steps") cfg.snapshot_every_steps = parse_number<int>(full, v);
            else if (full == "cli-runner.seed") cfg.seed = parse_number<std::uint64_t>(full, v);
            else throw ConfigError("unknown key '" + full + "'");
        }
    }
    scenario_by_name(cfg.scenario);
    if (cfg.cfl && !(*cfg.cfl > 0.0 && *cfg.cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
    if (cfg.nu && !(*cfg.nu >= 0.0)) throw ConfigError("nu must be >= 0");
    if (cfg.t_end && !(*cfg.t_end >= 0.0)) throw ConfigError("t_end must be >= 0");
    if (cfg.degree && (*cfg.degree < 1 || *cfg.degree > kMaxDegree)) throw ConfigError("degree must lie in [1, 15]");
    if (cfg.elements && *cfg.elements < 1) throw ConfigError("elements must be >= 1");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace mimhd
