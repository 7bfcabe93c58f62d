#ifndef MIMHD_PHYSICS_HPP
#define MIMHD_PHYSICS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "mimhd/state.hpp"

namespace mimhd {

template <typename Scalar>
struct AuxVelocities {
    Vec3<Scalar> v_plus = Vec3<Scalar>::Zero();
    std::array<Vec3<Scalar>, kMaxSpecies> v_plus_k{};
    std::array<Vec3<Scalar>, kMaxSpecies> v_minus_k{};
    Scalar ne_e = Scalar(0);
};

/// Everything the flux kernels read at one node, derived once from the conservative state.
template <typename Scalar>
struct PointState {
    int n_species = 1;
    std::array<Scalar, kMaxSpecies> rho{};
    std::array<Scalar, kMaxSpecies> p{};
    std::array<Scalar, kMaxSpecies> beta{};
    std::array<Scalar, kMaxSpecies> frac{}; // r_k rho_k / (n_e e)
    std::array<Vec3<Scalar>, kMaxSpecies> v{};
    std::array<Vec3<Scalar>, kMaxSpecies> v_plus_k{};
    std::array<Vec3<Scalar>, kMaxSpecies> v_minus_k{};
    Vec3<Scalar> B = Vec3<Scalar>::Zero();
    Vec3<Scalar> v_plus = Vec3<Scalar>::Zero();
    Scalar psi = Scalar(0);
    Scalar B2 = Scalar(0);
    Scalar p_e = Scalar(0);
    Scalar beta_plus = Scalar(0);
    Scalar rho_total = Scalar(0);
};

template <typename Scalar>
AuxVelocities<Scalar> aux_velocities(const Primitive<Scalar>& q, const SpeciesTable& cfg) {
    AuxVelocities<Scalar> a;
    for (int k = 0; k < cfg.n_species; ++k) a.ne_e += cfg.r(k) * q.rho[k];
    if (!(a.ne_e > 0)) throw DegenerateCharge("n_e e <= 0");
    for (int k = 0; k < cfg.n_species; ++k) {
        a.v_plus_k[k] = (cfg.r(k) * q.rho[k] / a.ne_e) * q.v[k];
        a.v_plus += a.v_plus_k[k];
    }
    for (int k = 0; k < cfg.n_species; ++k) a.v_minus_k[k] = a.v_plus - a.v_plus_k[k];
    return a;
}

template <typename Scalar>
AuxVelocities<Scalar> aux_velocities(const State<Scalar>& u, const SpeciesTable& cfg) {
    return aux_velocities(cons_to_prim(u, cfg), cfg);
}

template <typename Scalar>
Scalar electron_pressure(const Primitive<Scalar>& q, const SpeciesTable& cfg) {
    Scalar sum(0);
    for (int k = 0; k < cfg.n_species; ++k) sum += q.p[k];
    return cfg.electron_pressure_alpha * sum;
}

template <typename Scalar>
Scalar electron_pressure(const State<Scalar>& u, const SpeciesTable& cfg) {
    return electron_pressure(cons_to_prim(u, cfg), cfg);
}

template <typename Scalar>
PointState<Scalar> point_state(const Primitive<Scalar>& q, const SpeciesTable& cfg) {
    PointState<Scalar> s;
    const int ns = cfg.n_species;
    s.n_species = ns;
    const AuxVelocities<Scalar> a = aux_velocities(q, cfg);
    for (int k = 0; k < ns; ++k) {
        s.rho[k] = q.rho[k];
        s.p[k] = q.p[k];
        s.v[k] = q.v[k];
        s.beta[k] = q.rho[k] / (2.0 * q.p[k]);
        s.frac[k] = cfg.r(k) * q.rho[k] / a.ne_e;
        s.v_plus_k[k] = a.v_plus_k[k];
        s.v_minus_k[k] = a.v_minus_k[k];
        s.beta_plus += s.beta[k];
        s.rho_total += q.rho[k];
    }
    s.v_plus = a.v_plus;
    s.B = q.B;
    s.psi = q.psi;
    s.B2 = q.B.squaredNorm();
    s.p_e = electron_pressure(q, cfg);
    return s;
}

template <typename Scalar>
PointState<Scalar> point_state(const State<Scalar>& u, const SpeciesTable& cfg) {
    return point_state(cons_to_prim(u, cfg), cfg);
}

template <typename Scalar>
EntropyVars<Scalar> entropy_vars(const PointState<Scalar>& s, const SpeciesTable& cfg) {
    const int ns = cfg.n_species;
    EntropyVars<Scalar> w(cfg.vars());
    for (int k = 0; k < ns; ++k) {
        const double gk = cfg.g(k);
        const Scalar sk = specific_entropy(s.rho[k], s.p[k], gk);
        w(idx::rho(k)) = (gk - sk) / (gk - 1.0) - s.beta[k] * s.v[k].squaredNorm();
        w.template segment<3>(idx::mom(k, 0)) = 2.0 * s.beta[k] * s.v[k];
        w(idx::energy(k)) = -2.0 * s.beta[k];
    }
    w.template segment<3>(idx::B(ns, 0)) = 2.0 * s.beta_plus * s.B;
    w(idx::psi(ns)) = 2.0 * s.beta_plus * s.psi;
    return w;
}

template <typename Scalar>
Scalar entropy_flux(const PointState<Scalar>& s, const SpeciesTable& cfg, int dir) {
    Scalar F(0);
    for (int k = 0; k < cfg.n_species; ++k)
        F -= s.v[k](dir) * s.rho[k] * specific_entropy(s.rho[k], s.p[k], cfg.g(k)) / (cfg.g(k) - 1.0);
    return F;
}

/// Advective flux in direction dir (0 = x, 1 = y, 2 = z).
template <typename Scalar>
State<Scalar> physical_flux(const PointState<Scalar>& s, const SpeciesTable& cfg, double c_h, int dir) {
    const int ns = cfg.n_species;
    State<Scalar> f(cfg.vars());
    const Scalar Bd = s.B(dir);
    for (int k = 0; k < ns; ++k) {
        const double gk = cfg.g(k);
        const Scalar vd = s.v[k](dir);
        f(idx::rho(k)) = s.rho[k] * vd;
        f.template segment<3>(idx::mom(k, 0)) = s.rho[k] * vd * s.v[k];
        f(idx::mom(k, dir)) += s.p[k];
        f(idx::energy(k)) = vd * (0.5 * s.rho[k] * s.v[k].squaredNorm() + gk * s.p[k] / (gk - 1.0)) +
                            s.v_plus_k[k](dir) * s.B2 - Bd * s.v_plus_k[k].dot(s.B) + c_h * s.psi * Bd;
    }
    for (int m = 0; m < 3; ++m)
        f(idx::B(ns, m)) = (m == dir) ? Scalar(c_h * s.psi) : s.v_plus(dir) * s.B(m) - s.v_plus(m) * Bd;
    f(idx::psi(ns)) = c_h * Bd;
    return f;
}

template <typename Scalar>
State<Scalar> physical_flux(const State<Scalar>& u, const SpeciesTable& cfg, double c_h, int dir) {
    return physical_flux(point_state(u, cfg), cfg, c_h, dir);
}

/// Node-local factors of the non-conservative terms in direction dir. h_lor and phi_lor are
/// laid out like a State so that their elementwise product is the Lorentz contribution;
/// h_multi holds v-_{k,dir} B - v-_k B_dir per species.
template <typename Scalar>
struct NonconsLocal {
    State<Scalar> phi_gp;
    State<Scalar> phi_lor;
    State<Scalar> h_lor;
    std::array<Vec3<Scalar>, kMaxSpecies> h_multi{};
    State<Scalar> phi_glm;
};

template <typename Scalar>
NonconsLocal<Scalar> noncons_local_vectors(const PointState<Scalar>& s, const SpeciesTable& cfg, int dir) {
    const int ns = cfg.n_species;
    const int nv = cfg.vars();
    NonconsLocal<Scalar> n;
    n.phi_gp = State<Scalar>::Zero(nv);
    n.phi_lor = State<Scalar>::Zero(nv);
    n.h_lor = State<Scalar>::Zero(nv);
    n.phi_glm = State<Scalar>::Zero(nv);
    const Scalar Bd = s.B(dir);
    const Scalar vpB = s.v_plus.dot(s.B);
    for (int k = 0; k < ns; ++k) {
        n.phi_gp.template segment<3>(idx::mom(k, 0)) = s.frac[k] * s.B;
        n.phi_gp(idx::energy(k)) = vpB;
        n.phi_lor.template segment<3>(idx::mom(k, 0)).setConstant(s.frac[k]);
        n.phi_lor(idx::energy(k)) = s.v_plus_k[k](dir);
        for (int m = 0; m < 3; ++m) n.h_lor(idx::mom(k, m)) = -Bd * s.B(m);
        n.h_lor(idx::mom(k, dir)) += 0.5 * s.B2 + s.p_e;
        n.h_lor(idx::energy(k)) = s.p_e;
        n.h_multi[k] = s.v_minus_k[k](dir) * s.B - s.v_minus_k[k] * Bd;
        n.phi_glm(idx::energy(k)) = s.v_plus(dir) * s.psi;
    }
    n.phi_gp.template segment<3>(idx::B(ns, 0)) = s.v_plus;
    n.phi_glm(idx::psi(ns)) = s.v_plus(dir);
    return n;
}

template <typename Scalar>
NonconsLocal<Scalar> noncons_local_vectors(const State<Scalar>& u, const SpeciesTable& cfg, int dir) {
    return noncons_local_vectors(point_state(u, cfg), cfg, dir);
}

/// Non-derivative bundle phi_gp B_dir + phi_lor o h_lor + B . h_multi + phi_glm psi.
template <typename Scalar>
State<Scalar> noncons_term(const PointState<Scalar>& s, const SpeciesTable& cfg, int dir) {
    const NonconsLocal<Scalar> n = noncons_local_vectors(s, cfg, dir);
    State<Scalar> phi = n.phi_gp * s.B(dir) + n.phi_lor.cwiseProduct(n.h_lor) + n.phi_glm * s.psi;
    for (int k = 0; k < cfg.n_species; ++k) phi(idx::energy(k)) += s.B.dot(n.h_multi[k]);
    return phi;
}

template <typename Scalar>
State<Scalar> noncons_term(const State<Scalar>& u, const SpeciesTable& cfg, int dir) {
    return noncons_term(point_state(u, cfg), cfg, dir);
}

/// Psi = w . (f + Phi) - f^S.
template <typename Scalar>
Scalar entropy_potential(const PointState<Scalar>& s, const SpeciesTable& cfg, double c_h, int dir) {
    const EntropyVars<Scalar> w = entropy_vars(s, cfg);
    return w.dot(physical_flux(s, cfg, c_h, dir) + noncons_term(s, cfg, dir)) - entropy_flux(s, cfg, dir);
}

template <typename Scalar>
Scalar entropy_potential(const State<Scalar>& u, const SpeciesTable& cfg, double c_h, int dir) {
    return entropy_potential(point_state(u, cfg), cfg, c_h, dir);
}

/// Fast magnetosonic estimate maximized over species, with b = B / sqrt(rho_total).
template <typename Scalar>
Scalar fast_speed(const PointState<Scalar>& s, const SpeciesTable& cfg, const Vec3<Scalar>& n) {
    using std::sqrt;
    const Scalar b2 = s.B2 / s.rho_total;
    const Scalar bn = s.B.dot(n);
    const Scalar bn2 = bn * bn / s.rho_total;
    Scalar cf2(0);
    for (int k = 0; k < cfg.n_species; ++k) {
        const Scalar a2 = cfg.g(k) * s.p[k] / s.rho[k];
        const Scalar sum = a2 + b2;
        const Scalar disc = std::max(Scalar(0), sum * sum - 4.0 * a2 * bn2);
        cf2 = std::max(cf2, Scalar(0.5) * (sum + sqrt(disc)));
    }
    return sqrt(cf2);
}

template <typename Scalar>
Scalar fast_speed(const PointState<Scalar>& s, const SpeciesTable& cfg, int dir) {
    return fast_speed(s, cfg, Vec3<Scalar>(Vec3<Scalar>::Unit(dir)));
}

template <typename Scalar>
Scalar fast_speed(const State<Scalar>& u, const SpeciesTable& cfg, const Vec3<Scalar>& n) {
    return fast_speed(point_state(u, cfg), cfg, n);
}

/// Largest signed ion velocity along dir.
template <typename Scalar>
Scalar max_ion_velocity(const PointState<Scalar>& s, const SpeciesTable& cfg, int dir) {
    Scalar m = -std::numeric_limits<Scalar>::infinity();
    for (int k = 0; k < cfg.n_species; ++k) m = std::max(m, s.v[k](dir));
    return m;
}

template <typename Scalar>
Scalar lambda_max_interface(const PointState<Scalar>& sL, const PointState<Scalar>& sR,
                            const SpeciesTable& cfg, int dir) {
    return std::max(max_ion_velocity(sL, cfg, dir), max_ion_velocity(sR, cfg, dir)) +
           std::max(fast_speed(sL, cfg, dir), fast_speed(sR, cfg, dir));
}

template <typename Scalar>
Scalar lambda_max_interface(const State<Scalar>& uL, const State<Scalar>& uR, const SpeciesTable& cfg,
                            int dir) {
    return lambda_max_interface(point_state(uL, cfg), point_state(uR, cfg), cfg, dir);
}

/// Directional sum of (max ion velocity + fast speed) over the first `dim` axes.
template <typename Scalar>
Scalar lambda_max_nodal(const PointState<Scalar>& s, const SpeciesTable& cfg, int dim) {
    Scalar lam(0);
    for (int d = 0; d < dim; ++d) lam += max_ion_velocity(s, cfg, d) + fast_speed(s, cfg, d);
    return lam;
}

template <typename Scalar>
Scalar lambda_max_nodal(const State<Scalar>& u, const SpeciesTable& cfg, int dim = 2) {
    return lambda_max_nodal(point_state(u, cfg), cfg, dim);
}

/// Lorentz coupling between species; sits on the left-hand side of the balance law.
template <typename Scalar>
State<Scalar> lorentz_source(const PointState<Scalar>& s, const SpeciesTable& cfg) {
    State<Scalar> g = State<Scalar>::Zero(cfg.vars());
    for (int k = 0; k < cfg.n_species; ++k) {
        const Vec3<Scalar> force = (cfg.r(k) * s.rho[k]) * (s.v_plus - s.v[k]).cross(s.B);
        g.template segment<3>(idx::mom(k, 0)) = force;
        g(idx::energy(k)) = s.v[k].dot(force);
    }
    return g;
}

template <typename Scalar>
State<Scalar> lorentz_source(const State<Scalar>& u, const SpeciesTable& cfg) {
    return lorentz_source(point_state(u, cfg), cfg);
}

} // namespace mimhd

#endif
