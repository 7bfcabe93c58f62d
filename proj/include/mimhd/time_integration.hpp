#ifndef MIMHD_TIME_INTEGRATION_HPP
#define MIMHD_TIME_INTEGRATION_HPP

#include <array>
#include <functional>

#include "mimhd/diagnostics.hpp"

namespace mimhd {

/// Five-stage, fourth-order, 2N-storage Runge-Kutta coefficients (Carpenter & Kennedy).
struct LowStorageRk45 {
    static constexpr std::array<double, 5> a{0.0, -567301805773.0 / 1357537059087.0,
                                             -2404267990393.0 / 2016746695238.0,
                                             -3550918686646.0 / 2091501179385.0,
                                             -1275806237668.0 / 842570457699.0};
    static constexpr std::array<double, 5> b{1432997174477.0 / 9575080441755.0,
                                             5161836677717.0 / 13612068292357.0,
                                             1720146321549.0 / 2090206949498.0,
                                             3134564353537.0 / 4481467310338.0,
                                             2277821191437.0 / 14882151754819.0};
    static constexpr std::array<double, 5> c{0.0, 1432997174477.0 / 9575080441755.0,
                                             2526269341429.0 / 6820363962896.0,
                                             2006345519317.0 / 3224310063776.0,
                                             2802321613138.0 / 2924317926251.0};
};

/// One step of the low-storage scheme for any vector type. rate(u, t, k) writes du/dt into k.
/// If first_rate is given it receives the stage-one rate, i.e. du/dt at (u, t).
template <typename Vec, typename Rate>
void rk45_step(Vec& u, double t, double dt, Rate&& rate, Vec& du, Vec& k, Vec* first_rate = nullptr) {
    using C = LowStorageRk45;
    for (int s = 0; s < 5; ++s) {
        rate(u, t + C::c[s] * dt, k);
        if (s == 0) {
            if (first_rate) *first_rate = k;
            du = dt * k;
        } else {
            du = C::a[s] * du + dt * k;
        }
        u += C::b[s] * du;
    }
}

struct TimeLoopConfig {
    double cfl = 0.5;
    double t_end = 0.0;
    double nu = 0.5;
    int sample_every_steps = 1; // <= 0 disables step cadence
    double sample_every_time = 0.0; // <= 0 disables time cadence
};

/// min over nodes of CFL/(N+1) * h / lambda_node.
double compute_dt(const GridFunction& u, const Semidiscretization& sd, const TimeLoopConfig& cfg);

/// c_h = nu/dt * CFL h / (2(N+1)); zero while GLM is disabled.
double compute_ch(double dt, const Semidiscretization& sd, const TimeLoopConfig& cfg);

/// Advance u by dt with five rhs evaluations. first_rate receives du/dt at (u, t) if given.
void step_rk45(GridFunction& u, double t, double dt, const Semidiscretization& sd,
               GridFunction* first_rate = nullptr);

struct RunObserver {
    std::function<void(const DiagnosticsSample&)> on_sample;
    std::function<void(long step, double t, const GridFunction& u)> on_step;
};

struct RunResult {
    GridFunction u;
    DiagnosticsSeries series;
    long steps = 0;
    double t = 0.0;
};

/// Evaluate all diagnostics at one time level.
DiagnosticsSample make_sample(const GridFunction& u, const GridFunction& dudt, double t, double dt,
                              const Semidiscretization& sd, double poloidal_reference);

/// Time loop with step-frozen dt and c_h and a final step clamped onto t_end.
/// Throws SimulationAborted if a state becomes inadmissible or a wave speed non-finite.
RunResult run(const GridFunction& u0, Semidiscretization& sd, const TimeLoopConfig& cfg,
              const RunObserver& observer = {});

} // namespace mimhd

#endif
