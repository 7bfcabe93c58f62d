#ifndef MIMHD_STATE_HPP
#define MIMHD_STATE_HPP

#include <array>
#include <cmath>
#include <initializer_list>
#include <string>

#include <Eigen/Dense>

#include "mimhd/errors.hpp"

namespace mimhd {

inline constexpr int kMaxSpecies = 4;
inline constexpr int kMaxVars = 5 * kMaxSpecies + 4;

/// Number of conservative unknowns for n ion species.
constexpr int n_vars(int n_species) { return 5 * n_species + 4; }

/// Per-ion constants plus the electron pressure model p_e = alpha * sum(p_k).
struct SpeciesTable {
    int n_species = 1;
    std::array<double, kMaxSpecies> gamma{};
    std::array<double, kMaxSpecies> charge_to_mass{};
    double electron_pressure_alpha = 0.0;

    SpeciesTable() = default;
    SpeciesTable(std::initializer_list<double> gammas, std::initializer_list<double> charges,
                 double alpha)
        : n_species(static_cast<int>(gammas.size())), electron_pressure_alpha(alpha) {
        if (gammas.size() != charges.size())
            throw InvalidSpecies("gamma and charge_to_mass lengths differ");
        int k = 0;
        for (double g : gammas) gamma[static_cast<std::size_t>(k++)] = g;
        k = 0;
        for (double r : charges) charge_to_mass[static_cast<std::size_t>(k++)] = r;
        validate();
    }

    int vars() const { return n_vars(n_species); }
    double g(int k) const { return gamma[static_cast<std::size_t>(k)]; }
    double r(int k) const { return charge_to_mass[static_cast<std::size_t>(k)]; }

    void validate() const {
        if (n_species < 1 || n_species > kMaxSpecies)
            throw InvalidSpecies("n_species must lie in [1, " + std::to_string(kMaxSpecies) + "]");
        bool any_charge = false;
        for (int k = 0; k < n_species; ++k) {
            if (!(g(k) > 1.0)) throw InvalidSpecies("gamma must exceed 1");
            any_charge = any_charge || r(k) > 0.0;
        }
        if (!any_charge) throw InvalidSpecies("at least one species needs r_k > 0");
        if (!(electron_pressure_alpha >= 0.0)) throw InvalidSpecies("alpha must be >= 0");
    }
};

template <typename Scalar>
using State = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxVars, 1>;
template <typename Scalar>
using EntropyVars = State<Scalar>;
template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

/// Index helpers for the canonical layout.
namespace idx {
constexpr int rho(int k) { return 5 * k; }
constexpr int mom(int k, int m) { return 5 * k + 1 + m; }
constexpr int energy(int k) { return 5 * k + 4; }
constexpr int B(int n_species, int m) { return 5 * n_species + m; }
constexpr int psi(int n_species) { return 5 * n_species + 3; }
} // namespace idx

template <typename Scalar>
struct Primitive {
    int n_species = 1;
    std::array<Scalar, kMaxSpecies> rho{};
    std::array<Vec3<Scalar>, kMaxSpecies> v{};
    std::array<Scalar, kMaxSpecies> p{};
    Vec3<Scalar> B = Vec3<Scalar>::Zero();
    Scalar psi = Scalar(0);
};

template <typename Scalar>
Primitive<Scalar> cons_to_prim(const State<Scalar>& u, const SpeciesTable& cfg) {
    const int ns = cfg.n_species;
    Primitive<Scalar> q;
    q.n_species = ns;
    q.B = u.template segment<3>(idx::B(ns, 0));
    q.psi = u(idx::psi(ns));
    const Scalar mag = Scalar(0.5) * (q.B.squaredNorm() + q.psi * q.psi);
    for (int k = 0; k < ns; ++k) {
        const Scalar rho = u(idx::rho(k));
        if (!(rho > 0)) throw NonPositiveDensity("rho_" + std::to_string(k + 1) + " <= 0");
        const Vec3<Scalar> m = u.template segment<3>(idx::mom(k, 0));
        const Scalar p = (cfg.g(k) - 1.0) * (u(idx::energy(k)) - Scalar(0.5) * m.squaredNorm() / rho - mag);
        if (!(p > 0)) throw NonPositivePressure("p_" + std::to_string(k + 1) + " <= 0");
        q.rho[k] = rho;
        q.v[k] = m / rho;
        q.p[k] = p;
    }
    return q;
}

template <typename Scalar>
State<Scalar> prim_to_cons(const Primitive<Scalar>& q, const SpeciesTable& cfg) {
    const int ns = cfg.n_species;
    State<Scalar> u(cfg.vars());
    const Scalar mag = Scalar(0.5) * (q.B.squaredNorm() + q.psi * q.psi);
    for (int k = 0; k < ns; ++k) {
        if (!(q.rho[k] > 0)) throw NonPositiveDensity("rho_" + std::to_string(k + 1) + " <= 0");
        if (!(q.p[k] > 0)) throw NonPositivePressure("p_" + std::to_string(k + 1) + " <= 0");
        u(idx::rho(k)) = q.rho[k];
        u.template segment<3>(idx::mom(k, 0)) = q.rho[k] * q.v[k];
        u(idx::energy(k)) = q.p[k] / (cfg.g(k) - 1.0) + Scalar(0.5) * q.rho[k] * q.v[k].squaredNorm() + mag;
    }
    u.template segment<3>(idx::B(ns, 0)) = q.B;
    u(idx::psi(ns)) = q.psi;
    return u;
}

/// s_k = ln p_k - gamma_k ln rho_k.
template <typename Scalar>
Scalar specific_entropy(Scalar rho, Scalar p, double gamma) {
    using std::log;
    return log(p) - gamma * log(rho);
}

template <typename Scalar>
EntropyVars<Scalar> prim_to_entropy(const Primitive<Scalar>& q, const SpeciesTable& cfg) {
    const int ns = cfg.n_species;
    EntropyVars<Scalar> w(cfg.vars());
    Scalar beta_plus(0);
    for (int k = 0; k < ns; ++k) {
        const double gk = cfg.g(k);
        const Scalar beta = q.rho[k] / (2.0 * q.p[k]);
        const Scalar s = specific_entropy(q.rho[k], q.p[k], gk);
        w(idx::rho(k)) = (gk - s) / (gk - 1.0) - beta * q.v[k].squaredNorm();
        w.template segment<3>(idx::mom(k, 0)) = 2.0 * beta * q.v[k];
        w(idx::energy(k)) = -2.0 * beta;
        beta_plus += beta;
    }
    w.template segment<3>(idx::B(ns, 0)) = 2.0 * beta_plus * q.B;
    w(idx::psi(ns)) = 2.0 * beta_plus * q.psi;
    return w;
}

template <typename Scalar>
EntropyVars<Scalar> cons_to_entropy(const State<Scalar>& u, const SpeciesTable& cfg) {
    return prim_to_entropy(cons_to_prim(u, cfg), cfg);
}

template <typename Scalar>
State<Scalar> entropy_to_cons(const EntropyVars<Scalar>& w, const SpeciesTable& cfg) {
    using std::exp;
    using std::log;
    const int ns = cfg.n_species;
    Primitive<Scalar> q;
    q.n_species = ns;
    Scalar beta_plus(0);
    for (int k = 0; k < ns; ++k) {
        const Scalar beta = -0.5 * w(idx::energy(k));
        if (!(beta > 0)) throw InvalidEntropyState("beta_" + std::to_string(k + 1) + " <= 0");
        const double gk = cfg.g(k);
        q.v[k] = w.template segment<3>(idx::mom(k, 0)) / (2.0 * beta);
        const Scalar s = gk - (gk - 1.0) * (w(idx::rho(k)) + beta * q.v[k].squaredNorm());
        // ln p = ln rho - ln(2 beta) together with s = ln p - gamma ln rho
        q.rho[k] = exp(-(s + log(2.0 * beta)) / (gk - 1.0));
        q.p[k] = q.rho[k] / (2.0 * beta);
        beta_plus += beta;
    }
    q.B = w.template segment<3>(idx::B(ns, 0)) / (2.0 * beta_plus);
    q.psi = w(idx::psi(ns)) / (2.0 * beta_plus);
    return prim_to_cons(q, cfg);
}

/// S = sum_k -rho_k s_k / (gamma_k - 1).
template <typename Scalar>
Scalar math_entropy(const Primitive<Scalar>& q, const SpeciesTable& cfg) {
    Scalar S(0);
    for (int k = 0; k < cfg.n_species; ++k)
        S -= q.rho[k] * specific_entropy(q.rho[k], q.p[k], cfg.g(k)) / (cfg.g(k) - 1.0);
    return S;
}

template <typename Scalar>
Scalar math_entropy(const State<Scalar>& u, const SpeciesTable& cfg) {
    return math_entropy(cons_to_prim(u, cfg), cfg);
}

template <typename Scalar>
Scalar entropy_flux(const Primitive<Scalar>& q, const SpeciesTable& cfg, int dir) {
    Scalar F(0);
    for (int k = 0; k < cfg.n_species; ++k)
        F -= q.v[k](dir) * q.rho[k] * specific_entropy(q.rho[k], q.p[k], cfg.g(k)) / (cfg.g(k) - 1.0);
    return F;
}

template <typename Scalar>
Scalar entropy_flux(const State<Scalar>& u, const SpeciesTable& cfg, int dir) {
    return entropy_flux(cons_to_prim(u, cfg), cfg, dir);
}

} // namespace mimhd

#endif
