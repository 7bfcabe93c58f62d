#ifndef MIMHD_KERNELS_HPP
#define MIMHD_KERNELS_HPP

#include "mimhd/means.hpp"
#include "mimhd/physics.hpp"

namespace mimhd {

/// Entropy-conservative two-point flux.
template <typename Scalar>
State<Scalar> flux_ec(const PointState<Scalar>& L, const PointState<Scalar>& R, const SpeciesTable& cfg,
                      double c_h, int dir) {
    const int ns = cfg.n_species;
    State<Scalar> f(cfg.vars());

    const Vec3<Scalar> B = 0.5 * (L.B + R.B);
    const Vec3<Scalar> vp = 0.5 * (L.v_plus + R.v_plus);
    const Scalar Bd = B(dir);
    const Scalar psi = avg(L.psi, R.psi);
    const Scalar B2 = avg(L.B2, R.B2);

    Vec3<Scalar> fB;
    for (int m = 0; m < 3; ++m) fB(m) = (m == dir) ? Scalar(0) : vp(dir) * B(m) - vp(m) * Bd;
    const Scalar B_dot_fB = B.dot(fB);
    const Scalar glm_energy = c_h * (2.0 * psi * Bd - avg(L.psi * L.B(dir), R.psi * R.B(dir)));

    for (int k = 0; k < ns; ++k) {
        const double gk = cfg.g(k);
        const Scalar rho_ln = ln_mean(L.rho[k], R.rho[k]);
        const Scalar beta_ln = ln_mean(L.beta[k], R.beta[k]);
        const Vec3<Scalar> v = 0.5 * (L.v[k] + R.v[k]);
        const Scalar v2 = avg(L.v[k].squaredNorm(), R.v[k].squaredNorm());
        const Scalar p_bar = 0.5 * (L.rho[k] + R.rho[k]) / (L.beta[k] + R.beta[k]);

        const Scalar f_rho = rho_ln * v(dir);
        Vec3<Scalar> f_mom = f_rho * v;
        f_mom(dir) += p_bar;
        const Scalar e_euler = f_rho * (1.0 / (2.0 * (gk - 1.0) * beta_ln) - 0.5 * v2) + f_mom.dot(v);

        const Vec3<Scalar> vpk = 0.5 * (L.v_plus_k[k] + R.v_plus_k[k]);
        const Vec3<Scalar> vmk = 0.5 * (L.v_minus_k[k] + R.v_minus_k[k]);
        const Vec3<Scalar> h_multi = vmk(dir) * B - vmk * Bd;
        const Scalar e_mhd = B_dot_fB - 0.5 * avg(L.v_plus_k[k](dir) * L.B2, R.v_plus_k[k](dir) * R.B2) +
                             avg(L.v_plus_k[k].dot(L.B), R.v_plus_k[k].dot(R.B)) * Bd +
                             0.5 * vpk(dir) * B2 - vpk.dot(B) * Bd - B.dot(h_multi);

        f(idx::rho(k)) = f_rho;
        f.template segment<3>(idx::mom(k, 0)) = f_mom;
        f(idx::energy(k)) = e_euler + e_mhd + glm_energy;
    }
    f.template segment<3>(idx::B(ns, 0)) = fB;
    f(idx::B(ns, dir)) = c_h * psi;
    f(idx::psi(ns)) = c_h * Bd;
    return f;
}

/// Entropy-conservative non-conservative term; `loc` is the node the term is attached to.
template <typename Scalar>
State<Scalar> noncons_ec(const PointState<Scalar>& loc, const PointState<Scalar>& rem, const SpeciesTable& cfg,
                         int dir) {
    const int ns = cfg.n_species;
    State<Scalar> phi(cfg.vars());

    const Vec3<Scalar> B = 0.5 * (loc.B + rem.B);
    const Scalar Bd = B(dir);
    const Scalar psi = avg(loc.psi, rem.psi);
    const Scalar p_e = avg(loc.p_e, rem.p_e);

    Vec3<Scalar> h_lor = -Bd * B;
    h_lor(dir) += 0.5 * avg(loc.B2, rem.B2) + p_e;
    const Vec3<Scalar> gp_mom = Bd * loc.B + h_lor;
    const Scalar energy_common = loc.v_plus.dot(loc.B) * Bd + loc.v_plus(dir) * loc.psi * psi;

    for (int k = 0; k < ns; ++k) {
        const Vec3<Scalar> vmk = 0.5 * (loc.v_minus_k[k] + rem.v_minus_k[k]);
        const Vec3<Scalar> h_multi = vmk(dir) * B - vmk * Bd;
        phi(idx::rho(k)) = Scalar(0);
        phi.template segment<3>(idx::mom(k, 0)) = loc.frac[k] * gp_mom;
        phi(idx::energy(k)) = energy_common + loc.v_plus_k[k](dir) * p_e + loc.B.dot(h_multi);
    }
    phi.template segment<3>(idx::B(ns, 0)) = loc.v_plus * Bd;
    phi(idx::psi(ns)) = loc.v_plus(dir) * psi;
    return phi;
}

/// Arithmetic mean of the physical fluxes.
template <typename Scalar>
State<Scalar> flux_central(const PointState<Scalar>& L, const PointState<Scalar>& R, const SpeciesTable& cfg,
                           double c_h, int dir) {
    return 0.5 * (physical_flux(L, cfg, c_h, dir) + physical_flux(R, cfg, c_h, dir));
}

/// Local factors at `loc` times arithmetic means of the differentiated quantities.
template <typename Scalar>
State<Scalar> noncons_central(const PointState<Scalar>& loc, const PointState<Scalar>& rem,
                              const SpeciesTable& cfg, int dir) {
    const int ns = cfg.n_species;
    const NonconsLocal<Scalar> nl = noncons_local_vectors(loc, cfg, dir);
    const NonconsLocal<Scalar> nr = noncons_local_vectors(rem, cfg, dir);
    State<Scalar> phi = nl.phi_gp * avg(loc.B(dir), rem.B(dir)) +
                        nl.phi_lor.cwiseProduct(0.5 * (nl.h_lor + nr.h_lor)) +
                        nl.phi_glm * avg(loc.psi, rem.psi);
    for (int k = 0; k < ns; ++k) phi(idx::energy(k)) += loc.B.dot(0.5 * (nl.h_multi[k] + nr.h_multi[k]));
    return phi;
}

/// Rusanov flux with the interface wave-speed estimate.
template <typename Scalar>
State<Scalar> flux_llf(const PointState<Scalar>& L, const PointState<Scalar>& R, const State<Scalar>& uL,
                       const State<Scalar>& uR, const SpeciesTable& cfg, double c_h, int dir) {
    const Scalar lam = lambda_max_interface(L, R, cfg, dir);
    return flux_central(L, R, cfg, c_h, dir) - (0.5 * lam) * (uR - uL);
}

template <typename Scalar>
State<Scalar> flux_llf(const State<Scalar>& uL, const State<Scalar>& uR, const SpeciesTable& cfg, double c_h,
                       int dir) {
    return flux_llf(point_state(uL, cfg), point_state(uR, cfg), uL, uR, cfg, c_h, dir);
}

/// Mean quantities entering the dissipation matrix.
template <typename Scalar>
struct DissipationMeans {
    int n_species = 1;
    std::array<Scalar, kMaxSpecies> rho_ln{};
    std::array<Vec3<Scalar>, kMaxSpecies> v{};
    std::array<Scalar, kMaxSpecies> p_bar{};
    std::array<Scalar, kMaxSpecies> E_bar{};
    std::array<Scalar, kMaxSpecies> H55{};
    Vec3<Scalar> B = Vec3<Scalar>::Zero();
    Scalar psi = Scalar(0);
    Scalar tau = Scalar(0);
    Scalar E_mag2 = Scalar(0);
};

template <typename Scalar>
DissipationMeans<Scalar> dissipation_means(const PointState<Scalar>& L, const PointState<Scalar>& R,
                                           const SpeciesTable& cfg) {
    DissipationMeans<Scalar> d;
    d.n_species = cfg.n_species;
    d.B = 0.5 * (L.B + R.B);
    d.psi = avg(L.psi, R.psi);
    d.tau = 1.0 / (L.beta_plus + R.beta_plus);
    d.E_mag2 = d.tau * (d.B.squaredNorm() + d.psi * d.psi);
    for (int k = 0; k < cfg.n_species; ++k) {
        const double gk = cfg.g(k);
        const Scalar rho_ln = ln_mean(L.rho[k], R.rho[k]);
        const Scalar beta_ln = ln_mean(L.beta[k], R.beta[k]);
        const Vec3<Scalar> v = 0.5 * (L.v[k] + R.v[k]);
        const Scalar v_sq = v.squaredNorm();
        const Scalar p_bar = 0.5 * (L.rho[k] + R.rho[k]) / (L.beta[k] + R.beta[k]);
        const Scalar p_star = rho_ln / (2.0 * beta_ln);
        const Scalar E_bar =
            p_star / (gk - 1.0) + 0.5 * rho_ln * (2.0 * v_sq - avg(L.v[k].squaredNorm(), R.v[k].squaredNorm()));
        d.rho_ln[k] = rho_ln;
        d.v[k] = v;
        d.p_bar[k] = p_bar;
        d.E_bar[k] = E_bar;
        d.H55[k] = (p_star * p_star / (gk - 1.0) + E_bar * E_bar) / rho_ln + p_bar * v_sq + d.E_mag2;
    }
    return d;
}

/// Product of the block-sparse dissipation matrix with a vector in entropy-variable layout.
template <typename Scalar>
State<Scalar> dissipation_apply(const DissipationMeans<Scalar>& d, const State<Scalar>& x) {
    const int ns = d.n_species;
    State<Scalar> y(x.size());
    const Vec3<Scalar> xB = x.template segment<3>(idx::B(ns, 0));
    const Scalar xpsi = x(idx::psi(ns));
    const Scalar mag_coupling = d.tau * (d.B.dot(xB) + d.psi * xpsi);
    Scalar x5_sum(0);
    for (int k = 0; k < ns; ++k) x5_sum += x(idx::energy(k));

    for (int k = 0; k < ns; ++k) {
        const Scalar a0 = x(idx::rho(k));
        const Vec3<Scalar> am = x.template segment<3>(idx::mom(k, 0));
        const Scalar a4 = x(idx::energy(k));
        const Vec3<Scalar>& v = d.v[k];
        const Scalar rl = d.rho_ln[k];
        const Scalar v_am = v.dot(am);
        const Scalar Ep = d.E_bar[k] + d.p_bar[k];
        y(idx::rho(k)) = rl * a0 + rl * v_am + d.E_bar[k] * a4;
        y.template segment<3>(idx::mom(k, 0)) = (rl * a0 + rl * v_am + Ep * a4) * v + d.p_bar[k] * am;
        y(idx::energy(k)) = d.E_bar[k] * a0 + Ep * v_am + d.H55[k] * a4 + d.E_mag2 * (x5_sum - a4) + mag_coupling;
    }
    y.template segment<3>(idx::B(ns, 0)) = d.tau * (d.B * x5_sum + xB);
    y(idx::psi(ns)) = d.tau * (d.psi * x5_sum + xpsi);
    return y;
}

/// Dense assembly of the dissipation matrix, for inspection and tests.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dissipation_matrix_dense(const PointState<Scalar>& L,
                                                                               const PointState<Scalar>& R,
                                                                               const SpeciesTable& cfg) {
    const int nv = cfg.vars();
    const DissipationMeans<Scalar> d = dissipation_means(L, R, cfg);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> H(nv, nv);
    for (int j = 0; j < nv; ++j) {
        State<Scalar> e = State<Scalar>::Zero(nv);
        e(j) = Scalar(1);
        H.col(j) = dissipation_apply(d, e);
    }
    return H;
}

/// Entropy-stable flux: EC flux minus matrix dissipation on the entropy-variable jump.
template <typename Scalar>
State<Scalar> flux_es(const PointState<Scalar>& L, const PointState<Scalar>& R, const SpeciesTable& cfg,
                      double c_h, int dir) {
    const Scalar lam = lambda_max_interface(L, R, cfg, dir);
    const State<Scalar> dw = entropy_vars(R, cfg) - entropy_vars(L, cfg);
    return flux_ec(L, R, cfg, c_h, dir) - (0.5 * lam) * dissipation_apply(dissipation_means(L, R, cfg), dw);
}

enum class FluxKind { ec, es, llf, central };
enum class NonconsKind { ec, central };

/// A two-point flux together with the non-conservative term it is paired with.
struct KernelPair {
    FluxKind flux = FluxKind::ec;
    NonconsKind noncons = NonconsKind::ec;

    template <typename Scalar>
    State<Scalar> eval_flux(const PointState<Scalar>& L, const PointState<Scalar>& R, const State<Scalar>& uL,
                            const State<Scalar>& uR, const SpeciesTable& cfg, double c_h, int dir) const {
        switch (flux) {
        case FluxKind::ec: return flux_ec(L, R, cfg, c_h, dir);
        case FluxKind::es: return flux_es(L, R, cfg, c_h, dir);
        case FluxKind::llf: return flux_llf(L, R, uL, uR, cfg, c_h, dir);
        case FluxKind::central: return flux_central(L, R, cfg, c_h, dir);
        }
        return flux_ec(L, R, cfg, c_h, dir);
    }

    template <typename Scalar>
    State<Scalar> eval_noncons(const PointState<Scalar>& loc, const PointState<Scalar>& rem,
                               const SpeciesTable& cfg, int dir) const {
        return noncons == NonconsKind::ec ? noncons_ec(loc, rem, cfg, dir) : noncons_central(loc, rem, cfg, dir);
    }
};

inline constexpr KernelPair kEcKernels{FluxKind::ec, NonconsKind::ec};
inline constexpr KernelPair kEsKernels{FluxKind::es, NonconsKind::ec};
inline constexpr KernelPair kLlfKernels{FluxKind::llf, NonconsKind::central};
inline constexpr KernelPair kCentralKernels{FluxKind::central, NonconsKind::central};

/// Entropy balance defect of a kernel pair at one interface:
/// [w].f* + w_R.Phi(R,L) - w_L.Phi(L,R) - [Psi]. Zero for the EC pair, non-positive for ES.
template <typename Scalar>
Scalar tadmor_residual(const State<Scalar>& uL, const State<Scalar>& uR, const SpeciesTable& cfg, double c_h,
                       int dir, const KernelPair& kernels) {
    const PointState<Scalar> L = point_state(uL, cfg);
    const PointState<Scalar> R = point_state(uR, cfg);
    const EntropyVars<Scalar> wL = entropy_vars(L, cfg);
    const EntropyVars<Scalar> wR = entropy_vars(R, cfg);
    const State<Scalar> f = kernels.eval_flux(L, R, uL, uR, cfg, c_h, dir);
    return (wR - wL).dot(f) + wR.dot(kernels.eval_noncons(R, L, cfg, dir)) -
           wL.dot(kernels.eval_noncons(L, R, cfg, dir)) -
           (entropy_potential(R, cfg, c_h, dir) - entropy_potential(L, cfg, c_h, dir));
}

/// <w>.f_ec + w_L.Phi(L,R)/2 + w_R.Phi(R,L)/2 - <Psi>.
template <typename Scalar>
Scalar numerical_entropy_flux(const State<Scalar>& uL, const State<Scalar>& uR, const SpeciesTable& cfg,
                              double c_h, int dir) {
    const PointState<Scalar> L = point_state(uL, cfg);
    const PointState<Scalar> R = point_state(uR, cfg);
    const EntropyVars<Scalar> wL = entropy_vars(L, cfg);
    const EntropyVars<Scalar> wR = entropy_vars(R, cfg);
    return (0.5 * (wL + wR)).dot(flux_ec(L, R, cfg, c_h, dir)) + 0.5 * wL.dot(noncons_ec(L, R, cfg, dir)) +
           0.5 * wR.dot(noncons_ec(R, L, cfg, dir)) -
           avg(entropy_potential(L, cfg, c_h, dir), entropy_potential(R, cfg, c_h, dir));
}

// State-level conveniences.

template <typename Scalar>
State<Scalar> flux_ec(const State<Scalar>& uL, const State<Scalar>& uR, const SpeciesTable& cfg, double c_h,
                      int dir) {
    return flux_ec(point_state(uL, cfg), point_state(uR, cfg), cfg, c_h, dir);
}

template <typename Scalar>
State<Scalar> noncons_ec(const State<Scalar>& loc, const State<Scalar>& rem, const SpeciesTable& cfg, int dir) {
    return noncons_ec(point_state(loc, cfg), point_state(rem, cfg), cfg, dir);
}

template <typename Scalar>
State<Scalar> flux_es(const State<Scalar>& uL, const State<Scalar>& uR, const SpeciesTable& cfg, double c_h,
                      int dir) {
    return flux_es(point_state(uL, cfg), point_state(uR, cfg), cfg, c_h, dir);
}

template <typename Scalar>
State<Scalar> flux_central(const State<Scalar>& uL, const State<Scalar>& uR, const SpeciesTable& cfg, double c_h,
                           int dir) {
    return flux_central(point_state(uL, cfg), point_state(uR, cfg), cfg, c_h, dir);
}

template <typename Scalar>
State<Scalar> noncons_central(const State<Scalar>& loc, const State<Scalar>& rem, const SpeciesTable& cfg,
                              int dir) {
    return noncons_central(point_state(loc, cfg), point_state(rem, cfg), cfg, dir);
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dissipation_matrix_dense(const State<Scalar>& uL,
                                                                               const State<Scalar>& uR,
                                                                               const SpeciesTable& cfg) {
    return dissipation_matrix_dense(point_state(uL, cfg), point_state(uR, cfg), cfg);
}

} // namespace mimhd

#endif
