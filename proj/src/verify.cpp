#include "mimhd/verify.hpp"

#include <algorithm>
#include <cmath>

#include "mimhd/basis.hpp"
#include "mimhd/kernels.hpp"
#include "mimhd/sampling.hpp"

namespace mimhd {

namespace {

double rel_diff(const State<double>& a, const State<double>& b) {
    const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    return (a - b).cwiseAbs().maxCoeff() / scale;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

} // namespace

PropertyResult verify_shuffle_condition(std::uint64_t seed, long samples) {
    PropertyResult res{"ec_shuffle_condition", true, 0.0, 1e-12, samples};
    StateSampler rng(seed);
    for (long s = 0; s < samples; ++s) {
        const SpeciesTable cfg = rng.species(rng.integer(1, 3));
        const State<double> uL = rng.state(cfg);
        const State<double> uR = rng.state(cfg);
        const double c_h = rng.uniform(0.0, 2.0);
        for (int dir = 0; dir < 2; ++dir) {
            const double r = tadmor_residual(uL, uR, cfg, c_h, dir, kEcKernels);
            const double scale = std::abs(entropy_potential(uL, cfg, c_h, dir)) +
                                 std::abs(entropy_potential(uR, cfg, c_h, dir)) + 1.0;
            res.worst = std::max(res.worst, std::abs(r) / scale);
        }
    }
    res.pass = res.worst <= res.tolerance;
    return res;
}

PropertyResult verify_es_sign(std::uint64_t seed, long samples) {
    PropertyResult res{"es_entropy_dissipation", true, 0.0, 1e-13, samples};
    StateSampler rng(seed);
    for (long s = 0; s < samples; ++s) {
        const SpeciesTable cfg = rng.species(rng.integer(1, 3));
        const State<double> uL = rng.state(cfg);
        const State<double> uR = rng.state(cfg);
        const double c_h = rng.uniform(0.0, 2.0);
        for (int dir = 0; dir < 2; ++dir) {
            const double r = tadmor_residual(uL, uR, cfg, c_h, dir, kEsKernels);
            const double scale = std::abs(entropy_potential(uL, cfg, c_h, dir)) +
                                 std::abs(entropy_potential(uR, cfg, c_h, dir)) + 1.0;
            res.worst = std::max(res.worst, r / scale);
        }
    }
    res.pass = res.worst <= res.tolerance;
    return res;
}

PropertyResult verify_dissipation_spd(std::uint64_t seed, long samples) {
    PropertyResult res{"dissipation_matrix_spd", true, samples > 0 ? 1e300 : 0.0, 0.0, samples};
    StateSampler rng(seed);
    for (long s = 0; s < samples; ++s) {
        const SpeciesTable cfg = rng.species(1 + static_cast<int>(s % 3));
        const Eigen::MatrixXd H = dissipation_matrix_dense(rng.state(cfg), rng.state(cfg), cfg);
        const double asym = (H - H.transpose()).cwiseAbs().maxCoeff() / H.cwiseAbs().maxCoeff();
        Eigen::LLT<Eigen::MatrixXd> llt(H);
        const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(H, Eigen::EigenvaluesOnly)
                                   .eigenvalues()
                                   .minCoeff();
        if (asym > 1e-14 || llt.info() != Eigen::Success || !(min_eig > 0.0)) res.pass = false;
        res.worst = std::min(res.worst, min_eig);
    }
    return res;
}

PropertyResult verify_kernel_consistency(std::uint64_t seed, long samples) {
    PropertyResult res{"kernel_consistency", true, 0.0, 1e-14, samples};
    StateSampler rng(seed);
    for (long s = 0; s < samples; ++s) {
        const SpeciesTable cfg = rng.species(rng.integer(1, 3));
        const State<double> u = rng.state(cfg);
        const PointState<double> q = point_state(u, cfg);
        const double c_h = rng.uniform(0.0, 2.0);
        for (int dir = 0; dir < 2; ++dir) {
            const State<double> f = physical_flux(q, cfg, c_h, dir);
            const State<double> phi = noncons_term(q, cfg, dir);
            double worst = rel_diff(flux_ec(q, q, cfg, c_h, dir), f);
            worst = std::max(worst, rel_diff(flux_es(q, q, cfg, c_h, dir), f));
            worst = std::max(worst, rel_diff(flux_llf(q, q, u, u, cfg, c_h, dir), f));
            worst = std::max(worst, rel_diff(flux_central(q, q, cfg, c_h, dir), f));
            worst = std::max(worst, rel_diff(noncons_ec(q, q, cfg, dir), phi));
            worst = std::max(worst, rel_diff(noncons_central(q, q, cfg, dir), phi));
            res.worst = std::max(res.worst, worst);
        }
    }
    res.pass = res.worst <= res.tolerance;
    return res;
}

PropertyResult verify_round_trips(std::uint64_t seed, long samples) {
    PropertyResult res{"state_round_trips", true, 0.0, 1e-12, samples};
    StateSampler rng(seed);
    for (long s = 0; s < samples; ++s) {
        const SpeciesTable cfg = rng.species(rng.integer(1, 3));
        const State<double> u = rng.state(cfg);
        const double scale = u.cwiseAbs().maxCoeff();
        const double e1 = (prim_to_cons(cons_to_prim(u, cfg), cfg) - u).cwiseAbs().maxCoeff() / scale;
        const double e2 = (entropy_to_cons(cons_to_entropy(u, cfg), cfg) - u).cwiseAbs().maxCoeff() / scale;
        res.worst = std::max({res.worst, e1, e2});
    }
    res.pass = res.worst <= res.tolerance;
    return res;
}

PropertyResult verify_sbp_identity() {
    PropertyResult res{"sbp_identity", true, 0.0, 1e-13, kMaxDegree};
    for (int N = 1; N <= kMaxDegree; ++N) {
        const LGLBasis b = lgl_basis(N);
        res.worst = std::max(res.worst, (b.Q + b.Q.transpose() - b.B).cwiseAbs().maxCoeff());
    }
    res.pass = res.worst <= res.tolerance;
    return res;
}

PropertyResult verify_quadrature_exactness() {
    PropertyResult res{"quadrature_exactness", true, 0.0, 1e-12, kMaxDegree};
    for (int N = 1; N <= kMaxDegree; ++N) {
        const LGLBasis b = lgl_basis(N);
        for (int p = 0; p <= 2 * N - 1; ++p) {
            const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
            const double q = b.weights.dot(b.nodes.array().pow(p).matrix());
            res.worst = std::max(res.worst, rel_diff(q, exact));
        }
    }
    res.pass = res.worst <= res.tolerance;
    return res;
}

std::vector<PropertyResult> verify_all(std::uint64_t seed, long samples) {
    return {verify_round_trips(seed, samples),       verify_kernel_consistency(seed + 1, samples),
            verify_shuffle_condition(seed + 2, samples), verify_es_sign(seed + 3, samples),
            verify_dissipation_spd(seed + 4, samples > 0 ? std::max(samples / 5, 1L) : 0),
            verify_sbp_identity(),                   verify_quadrature_exactness()};
}

} // namespace mimhd
