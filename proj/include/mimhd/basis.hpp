#ifndef MIMHD_BASIS_HPP
#define MIMHD_BASIS_HPP

#include <Eigen/Dense>

#include "mimhd/errors.hpp"

namespace mimhd {

/// Legendre-Gauss-Lobatto collocation basis with its SBP operators on [-1, 1].
struct LGLBasis {
    int degree = 1;
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
    Eigen::VectorXd bary; // barycentric weights
    Eigen::MatrixXd D;    // D(j,k) = l_k'(xi_j)
    Eigen::MatrixXd Q;    // diag(weights) * D
    Eigen::MatrixXd B;    // diag(-1, 0, ..., 0, 1)
    Eigen::MatrixXd S;    // 2Q - B

    int n_nodes() const { return degree + 1; }
};

inline constexpr int kMaxDegree = 15;

LGLBasis lgl_basis(int degree);

/// Legendre polynomial P_n and its derivative at x.
void legendre(int n, double x, double& p, double& dp);

/// Lagrange basis values l_k(x) of the nodal basis.
Eigen::VectorXd lagrange_values(const LGLBasis& basis, double x);

} // namespace mimhd

#endif
