#include "mimhd/dgsem.hpp"

#include <array>

namespace mimhd {

namespace {

using LineMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxVars, kMaxDegree + 1>;

} // namespace

Semidiscretization::Semidiscretization(CartesianMesh mesh, LGLBasis basis, SpeciesTable cfg, KernelPair volume,
                                       KernelPair surface, GlmSettings glm, SourceFn source)
    : mesh_(std::move(mesh)), basis_(std::move(basis)), cfg_(cfg), volume_(volume), surface_(surface), glm_(glm),
      source_(std::move(source)) {
    cfg_.validate();
    if (!glm_.enabled) glm_.c_h = 0.0;
}

double Semidiscretization::node_weight(int i, int j) const {
    const double J = mesh_.jacobian();
    if (mesh_.dim == 1) return J * basis_.weights(i);
    return J * J * basis_.weights(i) * basis_.weights(j);
}

void Semidiscretization::update_point_states(const GridFunction& u) const {
    const int npe = nodes_per_element();
    cache_.resize(static_cast<std::size_t>(u.cols()));
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
        try {
            cache_[static_cast<std::size_t>(c)] = point_state(State<double>(u.col(c)), cfg_);
        } catch (const Error& err) {
            throw AdmissibilityLost(static_cast<int>(c / npe), static_cast<int>(c % npe), err.what());
        }
    }
}

State<double> slip_wall_state(const State<double>& u_in, const Vec3<double>& n, const SpeciesTable& cfg) {
    State<double> u = u_in;
    const int ns = cfg.n_species;
    for (int k = 0; k < ns; ++k) {
        const Vec3<double> m = u.segment<3>(idx::mom(k, 0));
        u.segment<3>(idx::mom(k, 0)) = m - 2.0 * m.dot(n) * n;
    }
    const Vec3<double> B = u.segment<3>(idx::B(ns, 0));
    u.segment<3>(idx::B(ns, 0)) = B - 2.0 * B.dot(n) * n;
    return u;
}

void Semidiscretization::volume_sweep(const GridFunction& u, int e, int line, int dir, GridFunction& dudt) const {
    const int n = basis_.n_nodes();
    const int nv = cfg_.vars();
    const double c_h = glm_.c_h;

    std::array<int, kMaxDegree + 1> ids{};
    std::array<State<double>, kMaxDegree + 1> us;
    const bool need_u = volume_.flux == FluxKind::llf;
    for (int a = 0; a < n; ++a) {
        ids[a] = dir == 0 ? node_index(e, a, line) : node_index(e, line, a);
        if (need_u) us[a] = u.col(ids[a]);
    }
    auto q = [&](int a) -> const PointState<double>& { return cache_[static_cast<std::size_t>(ids[a])]; };

    LineMatrix acc = LineMatrix::Zero(nv, n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const State<double> F = volume_.eval_flux(q(a), q(b), us[a], us[b], cfg_, c_h, dir);
            acc.col(a) += basis_.S(a, b) * (F + volume_.eval_noncons(q(a), q(b), cfg_, dir));
            acc.col(b) += basis_.S(b, a) * (F + volume_.eval_noncons(q(b), q(a), cfg_, dir));
        }
    }
    const double J = mesh_.jacobian();
    for (int a = 0; a < n; ++a) dudt.col(ids[a]) -= acc.col(a) / (J * basis_.weights(a));
}

void Semidiscretization::surface_terms(const GridFunction& u, int e, int line, int dir, GridFunction& dudt) const {
    const int N = basis_.degree;
    const double c_h = glm_.c_h;
    const double J = mesh_.jacobian();
    const double scale_lo = 1.0 / (J * basis_.weights(0));
    const double scale_hi = 1.0 / (J * basis_.weights(N));
    auto node = [&](int elem, int a) { return dir == 0 ? node_index(elem, a, line) : node_index(elem, line, a); };
    auto q = [&](int c) -> const PointState<double>& { return cache_[static_cast<std::size_t>(c)]; };

    // Interface towards the high neighbour, shared by both elements.
    const int nb = mesh_.neighbor(e, dir == 0 ? x_hi : y_hi);
    const int cL = node(e, N);
    if (nb >= 0) {
        const int cR = node(nb, 0);
        const State<double> uL = u.col(cL);
        const State<double> uR = u.col(cR);
        const State<double> F = surface_.eval_flux(q(cL), q(cR), uL, uR, cfg_, c_h, dir);
        dudt.col(cL) -= scale_hi * (F + surface_.eval_noncons(q(cL), q(cR), cfg_, dir));
        dudt.col(cR) += scale_lo * (F + surface_.eval_noncons(q(cR), q(cL), cfg_, dir));
    } else {
        Vec3<double> n = Vec3<double>::Zero();
        n(dir) = 1.0;
        const State<double> uL = u.col(cL);
        const State<double> ue = slip_wall_state(uL, n, cfg_);
        const PointState<double> qe = point_state(ue, cfg_);
        const State<double> F = surface_.eval_flux(q(cL), qe, uL, ue, cfg_, c_h, dir);
        dudt.col(cL) -= scale_hi * (F + surface_.eval_noncons(q(cL), qe, cfg_, dir));
    }
    // Wall on the low side; periodic and interior low faces belong to the neighbour.
    if (mesh_.neighbor(e, dir == 0 ? x_lo : y_lo) < 0) {
        Vec3<double> n = Vec3<double>::Zero();
        n(dir) = -1.0;
        const int c0 = node(e, 0);
        const State<double> u0 = u.col(c0);
        const State<double> ue = slip_wall_state(u0, n, cfg_);
        const PointState<double> qe = point_state(ue, cfg_);
        const State<double> F = surface_.eval_flux(qe, q(c0), ue, u0, cfg_, c_h, dir);
        dudt.col(c0) += scale_lo * (F + surface_.eval_noncons(q(c0), qe, cfg_, dir));
    }
}

void Semidiscretization::rhs(const GridFunction& u, double t, GridFunction& dudt) const {
    update_point_states(u);
    dudt.setZero(u.rows(), u.cols());
    const int n = basis_.n_nodes();
    const int lines = mesh_.dim == 1 ? 1 : n;
    for (int e = 0; e < mesh_.total_elements(); ++e)
        for (int dir = 0; dir < mesh_.dim; ++dir)
            for (int line = 0; line < lines; ++line) {
                volume_sweep(u, e, line, dir, dudt);
                surface_terms(u, e, line, dir, dudt);
            }
    for (int e = 0; e < mesh_.total_elements(); ++e) {
        for (int j = 0; j < lines; ++j)
            for (int i = 0; i < n; ++i) {
                const int c = node_index(e, i, j);
                dudt.col(c) -= lorentz_source(cache_[static_cast<std::size_t>(c)], cfg_);
                if (source_) dudt.col(c) += source_(node_x(e, i), node_y(e, j), t);
            }
    }
}

GridFunction Semidiscretization::rhs(const GridFunction& u, double t) const {
    GridFunction dudt;
    rhs(u, t, dudt);
    return dudt;
}

GridFunction Semidiscretization::interpolate(const std::function<State<double>(double, double)>& fn) const {
    GridFunction u(cfg_.vars(), total_nodes());
    const int n = basis_.n_nodes();
    const int nj = mesh_.dim == 1 ? 1 : n;
    for (int e = 0; e < mesh_.total_elements(); ++e)
        for (int j = 0; j < nj; ++j)
            for (int i = 0; i < n; ++i) u.col(node_index(e, i, j)) = fn(node_x(e, i), node_y(e, j));
    return u;
}

double element_entropy_rate(const GridFunction& u, const GridFunction& dudt, const Semidiscretization& sd, int e) {
    const int n = sd.basis().n_nodes();
    const int nj = sd.mesh().dim == 1 ? 1 : n;
    double rate = 0.0;
    for (int j = 0; j < nj; ++j)
        for (int i = 0; i < n; ++i) {
            const int c = sd.node_index(e, i, j);
            const EntropyVars<double> w = cons_to_entropy(State<double>(u.col(c)), sd.species());
            rate += sd.node_weight(i, j) * w.dot(dudt.col(c));
        }
    return rate;
}

} // namespace mimhd
