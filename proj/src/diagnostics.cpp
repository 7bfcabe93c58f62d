#include "mimhd/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mimhd {

namespace {

template <typename F>
void for_each_node(const Semidiscretization& sd, F&& f) {
    const int n = sd.basis().n_nodes();
    const int nj = sd.mesh().dim == 1 ? 1 : n;
    for (int e = 0; e < sd.mesh().total_elements(); ++e)
        for (int j = 0; j < nj; ++j)
            for (int i = 0; i < n; ++i) f(e, i, j, sd.node_index(e, i, j));
}

double domain_measure(const CartesianMesh& m) {
    double vol = m.hi[0] - m.lo[0];
    if (m.dim == 2) vol *= m.hi[1] - m.lo[1];
    return vol;
}

} // namespace

std::vector<double> l2_error(const GridFunction& u, const ExactFn& exact, double t, const Semidiscretization& sd) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(u.rows());
    for_each_node(sd, [&](int e, int i, int j, int c) {
        const State<double> ue = exact(sd.node_x(e, i), sd.node_y(e, j), t);
        acc += sd.node_weight(i, j) * (u.col(c) - ue).cwiseAbs2();
    });
    std::vector<double> out(static_cast<std::size_t>(u.rows()));
    for (Eigen::Index v = 0; v < u.rows(); ++v) out[static_cast<std::size_t>(v)] = std::sqrt(acc(v));
    return out;
}

std::vector<double> rms_error(const GridFunction& u, const ExactFn& exact, double t, const Semidiscretization& sd) {
    std::vector<double> out = l2_error(u, exact, t, sd);
    const double scale = 1.0 / std::sqrt(domain_measure(sd.mesh()));
    for (double& v : out) v *= scale;
    return out;
}

std::vector<double> rms_error_interpolated(const GridFunction& u, const ExactFn& exact, double t,
                                           const Semidiscretization& sd, int analysis_degree) {
    const LGLBasis& b = sd.basis();
    const CartesianMesh& mesh = sd.mesh();
    const LGLBasis a = lgl_basis(analysis_degree > 0 ? analysis_degree : std::min(2 * b.degree, kMaxDegree));
    const int na = a.n_nodes();
    const int n = b.n_nodes();
    Eigen::MatrixXd V(na, n);
    for (int i = 0; i < na; ++i) V.row(i) = lagrange_values(b, a.nodes(i)).transpose();
    const double J = mesh.jacobian();
    const int nv = static_cast<int>(u.rows());
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(nv);
    Eigen::MatrixXd ue(nv, n * (mesh.dim == 1 ? 1 : n));
    Eigen::MatrixXd tmp(nv, n);
    for (int e = 0; e < mesh.total_elements(); ++e) {
        for (int c = 0; c < sd.nodes_per_element(); ++c) ue.col(c) = u.col(e * sd.nodes_per_element() + c);
        if (mesh.dim == 1) {
            for (int i = 0; i < na; ++i) {
                const Eigen::VectorXd ui = ue * V.row(i).transpose();
                const double x = mesh.element_lo(e, 0) + J * (a.nodes(i) + 1.0);
                acc += J * a.weights(i) * (ui - exact(x, 0.0, t)).cwiseAbs2();
            }
            continue;
        }
        for (int j = 0; j < na; ++j) {
            tmp.setZero();
            for (int jj = 0; jj < n; ++jj) tmp += V(j, jj) * ue.middleCols(jj * n, n);
            const double y = mesh.element_lo(e, 1) + J * (a.nodes(j) + 1.0);
            for (int i = 0; i < na; ++i) {
                const Eigen::VectorXd ui = tmp * V.row(i).transpose();
                const double x = mesh.element_lo(e, 0) + J * (a.nodes(i) + 1.0);
                acc += J * J * a.weights(i) * a.weights(j) * (ui - exact(x, y, t)).cwiseAbs2();
            }
        }
    }
    const double vol = domain_measure(mesh);
    std::vector<double> out(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) out[static_cast<std::size_t>(v)] = std::sqrt(acc(v) / vol);
    return out;
}

std::vector<double> eoc(const std::vector<double>& errors) {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        if (errors[i] == 0.0 || errors[i + 1] == 0.0) throw ZeroError("EOC of a zero error");
        out.push_back(std::log2(errors[i] / errors[i + 1]));
    }
    return out;
}

double mean(const std::vector<double>& values) {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double total_entropy(const GridFunction& u, const Semidiscretization& sd) {
    double S = 0.0;
    for_each_node(sd, [&](int, int i, int j, int c) {
        S += sd.node_weight(i, j) * math_entropy(State<double>(u.col(c)), sd.species());
    });
    return S;
}

double total_entropy_rate(const GridFunction& u, const GridFunction& dudt, const Semidiscretization& sd) {
    double rate = 0.0;
    for (int e = 0; e < sd.mesh().total_elements(); ++e) rate += element_entropy_rate(u, dudt, sd, e);
    return rate;
}

DivergenceError divergence_error(const GridFunction& u, const Semidiscretization& sd) {
    if (sd.mesh().dim != 2) throw Requires2D("divergence error needs a 2D mesh");
    const int n = sd.basis().n_nodes();
    const int ns = sd.species().n_species;
    const int b1 = idx::B(ns, 0);
    const int b2 = idx::B(ns, 1);
    const double invJ = 1.0 / sd.mesh().jacobian();
    const Eigen::MatrixXd& D = sd.basis().D;
    DivergenceError err;
    double acc = 0.0;
    for (int e = 0; e < sd.mesh().total_elements(); ++e)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                double div = 0.0;
                for (int k = 0; k < n; ++k)
                    div += D(i, k) * u(b1, sd.node_index(e, k, j)) + D(j, k) * u(b2, sd.node_index(e, i, k));
                div *= invJ;
                acc += sd.node_weight(i, j) * div * div;
                err.linf = std::max(err.linf, std::abs(div));
            }
    err.l2 = std::sqrt(acc);
    return err;
}

double poloidal_integral(const GridFunction& u, const Semidiscretization& sd) {
    const int ns = sd.species().n_species;
    double acc = 0.0;
    for_each_node(sd, [&](int, int i, int j, int c) {
        const double b1 = u(idx::B(ns, 0), c);
        const double b2 = u(idx::B(ns, 1), c);
        acc += sd.node_weight(i, j) * (b1 * b1 + b2 * b2);
    });
    return acc;
}

double poloidal_energy(const GridFunction& u, const Semidiscretization& sd, double reference) {
    if (sd.mesh().dim != 2) throw Requires2D("poloidal energy needs a 2D mesh");
    if (!(reference > 0.0)) throw ZeroReference("reference poloidal energy must be positive");
    return poloidal_integral(u, sd) / reference;
}

Eigen::VectorXd integrate(const GridFunction& u, const Semidiscretization& sd) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(u.rows());
    for_each_node(sd, [&](int, int i, int j, int c) { acc += sd.node_weight(i, j) * u.col(c); });
    return acc;
}

Vec3<double> total_momentum(const GridFunction& u, const Semidiscretization& sd) {
    const Eigen::VectorXd q = integrate(u, sd);
    Vec3<double> m = Vec3<double>::Zero();
    for (int k = 0; k < sd.species().n_species; ++k) m += q.segment<3>(idx::mom(k, 0));
    return m;
}

double total_energy(const GridFunction& u, const Semidiscretization& sd) {
    const int ns = sd.species().n_species;
    double acc = 0.0;
    for_each_node(sd, [&](int, int i, int j, int c) {
        double E = 0.0;
        for (int k = 0; k < ns; ++k) E += u(idx::energy(k), c);
        const double mag =
            0.5 * (u.col(c).segment<3>(idx::B(ns, 0)).squaredNorm() + u(idx::psi(ns), c) * u(idx::psi(ns), c));
        acc += sd.node_weight(i, j) * (E - (ns - 1) * mag);
    });
    return acc;
}

void DiagnosticsSeries::push(const DiagnosticsSample& s) {
    if (!samples_.empty() && !(s.t > samples_.back().t))
        throw Error("diagnostics samples must have strictly increasing times");
    samples_.push_back(s);
}

} // namespace mimhd
