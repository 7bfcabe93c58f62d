#include <doctest.h>

#include <cmath>

#include "mimhd/basis.hpp"
#include "mimhd/mesh.hpp"

using namespace mimhd;

TEST_CASE("low-degree LGL rules") {
    const LGLBasis b1 = lgl_basis(1);
    CHECK(b1.nodes(0) == -1.0);
    CHECK(b1.nodes(1) == 1.0);
    CHECK(b1.weights(0) == doctest::Approx(1.0));
    CHECK(b1.weights(1) == doctest::Approx(1.0));

    const LGLBasis b2 = lgl_basis(2);
    CHECK(b2.nodes(1) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(b2.weights(0) == doctest::Approx(1.0 / 3.0));
    CHECK(b2.weights(1) == doctest::Approx(4.0 / 3.0));
    CHECK(b2.weights(2) == doctest::Approx(1.0 / 3.0));

    const LGLBasis b3 = lgl_basis(3);
    CHECK(b3.nodes(2) == doctest::Approx(1.0 / std::sqrt(5.0)));
    CHECK(b3.weights(0) == doctest::Approx(1.0 / 6.0));
    CHECK(b3.weights(1) == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("SBP structure for every supported degree") {
    for (int N = 1; N <= kMaxDegree; ++N) {
        CAPTURE(N);
        const LGLBasis b = lgl_basis(N);
        CHECK(b.nodes(0) == -1.0);
        CHECK(b.nodes(N) == 1.0);
        for (int j = 0; j < N; ++j) CHECK(b.nodes(j) < b.nodes(j + 1));
        CHECK(std::abs(b.weights.sum() - 2.0) <= 1e-13);
        CHECK((b.Q + b.Q.transpose() - b.B).cwiseAbs().maxCoeff() <= 1e-13);
        CHECK(b.D.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((b.S - (2.0 * b.Q - b.B)).cwiseAbs().maxCoeff() == 0.0);
        CHECK((b.S + b.S.transpose()).cwiseAbs().maxCoeff() <= 1e-12);

        // D exact on degree <= N, quadrature exact on degree <= 2N - 1
        for (int p = 0; p <= N; ++p) {
            Eigen::VectorXd f(N + 1), df(N + 1);
            for (int j = 0; j <= N; ++j) {
                f(j) = std::pow(b.nodes(j), p);
                df(j) = p == 0 ? 0.0 : p * std::pow(b.nodes(j), p - 1);
            }
            CHECK((b.D * f - df).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1, p));
        }
        for (int p = 0; p <= 2 * N - 1; ++p) {
            double q = 0.0;
            for (int j = 0; j <= N; ++j) q += b.weights(j) * std::pow(b.nodes(j), p);
            const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
            CHECK(std::abs(q - exact) <= 1e-12);
        }
    }
}

TEST_CASE("Lagrange values interpolate") {
    const LGLBasis b = lgl_basis(4);
    for (int j = 0; j <= 4; ++j) {
        const Eigen::VectorXd l = lagrange_values(b, b.nodes(j));
        for (int k = 0; k <= 4; ++k) CHECK(l(k) == doctest::Approx(j == k ? 1.0 : 0.0));
    }
    const Eigen::VectorXd l = lagrange_values(b, 0.37);
    CHECK(l.sum() == doctest::Approx(1.0));
    Eigen::VectorXd f(5);
    for (int j = 0; j <= 4; ++j) f(j) = std::pow(b.nodes(j), 3) - b.nodes(j);
    CHECK(l.dot(f) == doctest::Approx(std::pow(0.37, 3) - 0.37));
}

TEST_CASE("Legendre polynomials") {
    double p, dp;
    legendre(2, 0.5, p, dp);
    CHECK(p == doctest::Approx(-0.125));
    CHECK(dp == doctest::Approx(1.5));
    legendre(0, 0.3, p, dp);
    CHECK(p == 1.0);
    CHECK(dp == 0.0);
}

TEST_CASE("unsupported degrees") {
    CHECK_THROWS_AS(lgl_basis(0), UnsupportedDegree);
    CHECK_THROWS_AS(lgl_basis(16), UnsupportedDegree);
}

TEST_CASE("mesh construction") {
    const std::array<BoundaryKind, 4> periodic{BoundaryKind::periodic, BoundaryKind::periodic, BoundaryKind::periodic,
                                               BoundaryKind::periodic};
    const CartesianMesh m = build_mesh(2, {-1, -1}, {1, 1}, 16, periodic);
    CHECK(m.total_elements() == 256);
    CHECK(m.h == doctest::Approx(0.125));
    CHECK(m.jacobian() == doctest::Approx(0.0625));
    CHECK(m.neighbor(0, x_lo) == 15);
    CHECK(m.neighbor(0, y_lo) == 240);
    CHECK(m.neighbor(17, x_hi) == 18);
    CHECK(m.neighbor(17, y_hi) == 33);
    CHECK(m.element_lo(17, 0) == doctest::Approx(-0.875));
    CHECK(m.element_lo(17, 1) == doctest::Approx(-0.875));

    const std::array<BoundaryKind, 4> khi{BoundaryKind::periodic, BoundaryKind::periodic, BoundaryKind::slip_wall,
                                          BoundaryKind::slip_wall};
    const CartesianMesh k = build_mesh(2, {-1, -1}, {1, 1}, 4, khi);
    CHECK(k.neighbor(0, x_lo) == 3);
    CHECK(k.neighbor(0, y_lo) == -1);
    CHECK(k.neighbor(15, y_hi) == -1);
    CHECK(k.interface_count() == 4 * 4 + 5 * 4);

    const std::array<BoundaryKind, 4> walls{BoundaryKind::slip_wall, BoundaryKind::slip_wall, BoundaryKind::periodic,
                                            BoundaryKind::periodic};
    CHECK(build_mesh(1, {-1, 0}, {1, 0}, 4, walls).interface_count() == 5);
    CHECK(build_mesh(1, {-1, 0}, {1, 0}, 4, periodic).interface_count() == 4);
    CHECK(build_mesh(1, {-1, 0}, {1, 0}, 4, periodic).total_elements() == 4);

    CHECK_THROWS_AS(build_mesh(2, {-1, -1}, {1, 1}, 0, periodic), InvalidDomain);
    CHECK_THROWS_AS(build_mesh(2, {1, -1}, {1, 1}, 4, periodic), InvalidDomain);
    CHECK_THROWS_AS(build_mesh(3, {-1, -1}, {1, 1}, 4, periodic), InvalidDomain);
    CHECK(parse_boundary("slip_wall") == BoundaryKind::slip_wall);
    CHECK(to_string(BoundaryKind::periodic) == "periodic");
    CHECK_THROWS_AS(parse_boundary("outflow"), ConfigError);
}
