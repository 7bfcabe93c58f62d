#include "mimhd/time_integration.hpp"

#include <cmath>
#include <limits>

namespace mimhd {

double compute_dt(const GridFunction& u, const Semidiscretization& sd, const TimeLoopConfig& cfg) {
    sd.update_point_states(u);
    const int dim = sd.mesh().dim;
    double lam_max = 0.0;
    for (const PointState<double>& s : sd.point_states()) {
        const double lam = lambda_max_nodal(s, sd.species(), dim);
        if (!std::isfinite(lam) || !(lam > 0.0)) throw NonFiniteWaveSpeed("non-finite or non-positive wave speed");
        lam_max = std::max(lam_max, lam);
    }
    return cfg.cfl / (sd.basis().degree + 1) * sd.mesh().h / lam_max;
}

double compute_ch(double dt, const Semidiscretization& sd, const TimeLoopConfig& cfg) {
    if (!sd.glm().enabled || cfg.nu == 0.0) return 0.0;
    return cfg.nu / dt * cfg.cfl * sd.mesh().h / (2.0 * (sd.basis().degree + 1));
}

void step_rk45(GridFunction& u, double t, double dt, const Semidiscretization& sd, GridFunction* first_rate) {
    GridFunction du(u.rows(), u.cols());
    GridFunction k(u.rows(), u.cols());
    rk45_step(u, t, dt, [&](const GridFunction& x, double tt, GridFunction& out) { sd.rhs(x, tt, out); }, du, k,
              first_rate);
}

DiagnosticsSample make_sample(const GridFunction& u, const GridFunction& dudt, double t, double dt,
                              const Semidiscretization& sd, double poloidal_reference) {
    DiagnosticsSample s;
    s.t = t;
    s.dt = dt;
    s.entropy = total_entropy(u, sd);
    s.entropy_rate = total_entropy_rate(u, dudt, sd);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (sd.mesh().dim == 2) {
        const DivergenceError d = divergence_error(u, sd);
        s.divB_l2 = d.l2;
        s.divB_linf = d.linf;
        s.poloidal = poloidal_reference > 0.0 ? poloidal_integral(u, sd) / poloidal_reference : nan;
    } else {
        s.divB_l2 = s.divB_linf = s.poloidal = nan;
    }
    s.momentum = total_momentum(u, sd);
    s.energy = total_energy(u, sd);
    return s;
}

RunResult run(const GridFunction& u0, Semidiscretization& sd, const TimeLoopConfig& cfg, const RunObserver& observer) {
    RunResult res;
    res.u = u0;
    if (observer.on_step) observer.on_step(0, 0.0, res.u);
    if (!(cfg.t_end > 0.0)) return res;

    const double poloidal_ref = sd.mesh().dim == 2 ? poloidal_integral(u0, sd) : 0.0;
    auto record = [&](const DiagnosticsSample& s) {
        res.series.push(s);
        if (observer.on_sample) observer.on_sample(s);
    };

    GridFunction du(u0.rows(), u0.cols());
    GridFunction k(u0.rows(), u0.cols());
    GridFunction first(u0.rows(), u0.cols());
    double next_sample_time = 0.0;
    double dt = 0.0;
    double t = 0.0;
    long step = 0;
    try {
        while (t < cfg.t_end) {
            const double dt_cfl = compute_dt(res.u, sd, cfg);
            dt = dt_cfl;
            const bool last = t + dt >= cfg.t_end * (1.0 - 1e-14);
            if (last) dt = cfg.t_end - t;
            sd.set_cleaning_speed(compute_ch(dt_cfl, sd, cfg));

            const bool by_step = cfg.sample_every_steps > 0 && step % cfg.sample_every_steps == 0;
            const bool by_time = cfg.sample_every_time > 0.0 && t >= next_sample_time;
            const bool sample = step == 0 || by_step || by_time;
            const GridFunction u_start = sample ? res.u : GridFunction();

            rk45_step(res.u, t, dt, [&](const GridFunction& x, double tt, GridFunction& out) { sd.rhs(x, tt, out); },
                      du, k, sample ? &first : nullptr);
            if (sample) {
                record(make_sample(u_start, first, t, dt, sd, poloidal_ref));
                if (cfg.sample_every_time > 0.0)
                    while (next_sample_time <= t) next_sample_time += cfg.sample_every_time;
            }
            t = last ? cfg.t_end : t + dt;
            ++step;
            res.t = t;
            res.steps = step;
            if (observer.on_step) observer.on_step(step, t, res.u);
        }
        sd.rhs(res.u, t, first);
    } catch (const AdmissibilityLost& err) {
        throw SimulationAborted(step, t, err.what());
    } catch (const NonFiniteWaveSpeed& err) {
        throw SimulationAborted(step, t, err.what());
    }
    record(make_sample(res.u, first, t, dt, sd, poloidal_ref));
    return res;
}

} // namespace mimhd
