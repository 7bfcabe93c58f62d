#include "mimhd/basis.hpp"

#include <cmath>
#include <numbers>

#include "mimhd/errors.hpp"

namespace mimhd {

void legendre(int n, double x, double& p, double& dp) {
    double p_prev = 1.0;
    double dp_prev = 0.0;
    p = x;
    dp = 1.0;
    if (n == 0) {
        p = 1.0;
        dp = 0.0;
        return;
    }
    for (int k = 2; k <= n; ++k) {
        const double p_next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
        const double dp_next = dp_prev + (2 * k - 1) * p;
        p_prev = p;
        dp_prev = dp;
        p = p_next;
        dp = dp_next;
    }
}

namespace {

// Interior LGL nodes are the roots of q(x) = P_{N+1}(x) - P_{N-1}(x), a multiple of (1 - x^2) P_N'(x).
void lobatto_q(int n, double x, double& q, double& dq) {
    double pm, dpm, pp, dpp;
    legendre(n - 1, x, pm, dpm);
    legendre(n + 1, x, pp, dpp);
    q = pp - pm;
    dq = dpp - dpm;
}

} // namespace

LGLBasis lgl_basis(int degree) {
    if (degree < 1 || degree > kMaxDegree) throw UnsupportedDegree("degree must lie in [1, 15]");
    const int n = degree;
    LGLBasis b;
    b.degree = n;
    b.nodes.resize(n + 1);
    b.weights.resize(n + 1);
    b.nodes(0) = -1.0;
    b.nodes(n) = 1.0;
    for (int j = 1; j < n; ++j) {
        double x = -std::cos(std::numbers::pi * j / n);
        for (int it = 0; it < 100; ++it) {
            double q, dq;
            lobatto_q(n, x, q, dq);
            const double dx = q / dq;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        b.nodes(j) = x;
    }
    // Symmetrize to remove the last ulp of Newton noise.
    for (int j = 0; j <= n / 2; ++j) {
        const double x = 0.5 * (b.nodes(n - j) - b.nodes(j));
        b.nodes(j) = -x;
        b.nodes(n - j) = x;
    }
    if (n % 2 == 0) b.nodes(n / 2) = 0.0;
    for (int j = 0; j <= n; ++j) {
        double p, dp;
        legendre(n, b.nodes(j), p, dp);
        b.weights(j) = 2.0 / (n * (n + 1) * p * p);
    }

    b.bary.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        double prod = 1.0;
        for (int k = 0; k <= n; ++k)
            if (k != j) prod *= b.nodes(j) - b.nodes(k);
        b.bary(j) = 1.0 / prod;
    }
    b.D = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int j = 0; j <= n; ++j) {
        double diag = 0.0;
        for (int k = 0; k <= n; ++k) {
            if (k == j) continue;
            b.D(j, k) = b.bary(k) / (b.bary(j) * (b.nodes(j) - b.nodes(k)));
            diag -= b.D(j, k);
        }
        b.D(j, j) = diag;
    }
    b.Q = b.weights.asDiagonal() * b.D;
    b.B = Eigen::MatrixXd::Zero(n + 1, n + 1);
    b.B(0, 0) = -1.0;
    b.B(n, n) = 1.0;
    b.S = 2.0 * b.Q - b.B;
    return b;
}

Eigen::VectorXd lagrange_values(const LGLBasis& basis, double x) {
    const int n = basis.n_nodes();
    Eigen::VectorXd l(n);
    for (int k = 0; k < n; ++k)
        if (x == basis.nodes(k)) {
            l.setZero();
            l(k) = 1.0;
            return l;
        }
    double denom = 0.0;
    for (int k = 0; k < n; ++k) {
        l(k) = basis.bary(k) / (x - basis.nodes(k));
        denom += l(k);
    }
    return l / denom;
}

} // namespace mimhd
