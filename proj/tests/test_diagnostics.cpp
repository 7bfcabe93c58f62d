#include <doctest.h>

#include <cmath>

#include "mimhd/diagnostics.hpp"
#include "mimhd/scenarios.hpp"

using namespace mimhd;

namespace {

const std::array<BoundaryKind, 4> kPeriodic{BoundaryKind::periodic, BoundaryKind::periodic, BoundaryKind::periodic,
                                            BoundaryKind::periodic};

Semidiscretization square_sd(const SpeciesTable& cfg, int ne, int degree = 3, int dim = 2) {
    return Semidiscretization(build_mesh(dim, {-1.0, -1.0}, {1.0, 1.0}, ne, kPeriodic), lgl_basis(degree), cfg,
                              kEcKernels, kEsKernels);
}

State<double> rest_state(const SpeciesTable& cfg, const Vec3<double>& B) {
    Primitive<double> q;
    q.n_species = cfg.n_species;
    for (int k = 0; k < cfg.n_species; ++k) {
        q.rho[k] = 1.0 + 0.25 * k;
        q.v[k] = Vec3<double>(0.1, -0.2, 0.05 * k);
        q.p[k] = 2.0;
    }
    q.B = B;
    return prim_to_cons(q, cfg);
}

GridFunction field(const Semidiscretization& sd, const std::function<Vec3<double>(double, double)>& B) {
    const SpeciesTable cfg = sd.species();
    return sd.interpolate([&](double x, double y) { return rest_state(cfg, B(x, y)); });
}

} // namespace

TEST_CASE("error norms vanish on the exact solution") {
    const Scenario mf = manufactured();
    const Semidiscretization sd = square_sd(mf.species, 4);
    const GridFunction u = sd.interpolate([&](double x, double y) { return mf.exact(x, y, 0.0); });
    for (double e : l2_error(u, mf.exact, 0.0, sd)) CHECK(e == 0.0);
    for (double e : rms_error(u, mf.exact, 0.0, sd)) CHECK(e == 0.0);
}

TEST_CASE("constant offset gives epsilon times the domain root") {
    const SpeciesTable cfg({1.4, 5.0 / 3.0}, {1.0, 2.0}, 0.0);
    const Semidiscretization sd = square_sd(cfg, 3);
    auto poly = [cfg](double x, double y, double) {
        return rest_state(cfg, Vec3<double>(0.1 + 0.3 * x * x - 0.2 * x * y, 0.05 * y * y * y, 0.4 * x));
    };
    const double eps = 1e-3;
    GridFunction u = sd.interpolate([&](double x, double y) { return poly(x, y, 0.25); });
    u.array() += eps;
    for (double e : l2_error(u, poly, 0.25, sd)) CHECK(e == doctest::Approx(2.0 * eps).epsilon(1e-10));
    for (double e : rms_error(u, poly, 0.25, sd)) CHECK(e == doctest::Approx(eps).epsilon(1e-10));
    const auto interp = rms_error_interpolated(u, poly, 0.25, sd);
    for (int m = 0; m < 3; ++m)
        CHECK(interp[static_cast<std::size_t>(idx::B(2, m))] == doctest::Approx(eps).epsilon(1e-10));
}

TEST_CASE("analysis-grid error sees the interpolation error between nodes") {
    const Scenario mf = manufactured();
    const Semidiscretization sd = square_sd(mf.species, 2, 2);
    const GridFunction u = sd.interpolate([&](double x, double y) { return mf.exact(x, y, 0.0); });
    const auto coarse = rms_error_interpolated(u, mf.exact, 0.0, sd);
    const int rho = idx::rho(0);
    CHECK(coarse[static_cast<std::size_t>(rho)] > 1e-6);

    // polynomial data of degree N is reproduced exactly
    const SpeciesTable cfg = mf.species;
    auto poly = [cfg](double x, double y, double) {
        return rest_state(cfg, Vec3<double>(0.1 + 0.3 * x * x - 0.2 * x * y, 0.05 * y * y, 0.4 * x));
    };
    const GridFunction p = sd.interpolate([&](double x, double y) { return poly(x, y, 0.0); });
    const auto exact_poly = rms_error_interpolated(p, poly, 0.0, sd);
    const int b1 = idx::B(cfg.n_species, 0);
    CHECK(exact_poly[static_cast<std::size_t>(b1)] < 1e-14);
}

TEST_CASE("eoc of halving sequences") {
    const auto r = eoc({1.0, 0.25});
    REQUIRE(r.size() == 1);
    CHECK(r[0] == doctest::Approx(2.0));

    const auto b1 = eoc({7.33e-6, 3.79e-7, 1.55e-8, 9.84e-10});
    REQUIRE(b1.size() == 3);
    CHECK(b1[0] == doctest::Approx(4.27).epsilon(0.005));
    CHECK(b1[1] == doctest::Approx(4.61).epsilon(0.005));
    CHECK(b1[2] == doctest::Approx(3.98).epsilon(0.005));
    CHECK(mean(b1) == doctest::Approx(4.29).epsilon(0.005));

    CHECK_THROWS_AS(eoc({1.0, 0.0}), ZeroError);
    CHECK(eoc({1.0}).empty());
    CHECK(std::isnan(mean({})));
}

TEST_CASE("entropy rate of a frozen state is zero") {
    const Scenario wb = weak_blast();
    const Semidiscretization sd = square_sd(wb.species, 2);
    const GridFunction u = sd.interpolate(wb.initial);
    const GridFunction zero = GridFunction::Zero(u.rows(), u.cols());
    CHECK(total_entropy_rate(u, zero, sd) == 0.0);
    CHECK(total_entropy(u, sd) < 0.0);
}

TEST_CASE("total entropy of a constant state") {
    const SpeciesTable cfg({1.4, 5.0 / 3.0}, {1.0, 2.0}, 0.0);
    const Semidiscretization sd = square_sd(cfg, 3);
    const State<double> s = rest_state(cfg, Vec3<double>(0.3, 0.1, -0.2));
    const GridFunction u = sd.interpolate([&](double, double) { return s; });
    CHECK(total_entropy(u, sd) == doctest::Approx(4.0 * math_entropy(s, cfg)).epsilon(1e-12));
}

TEST_CASE("discrete divergence") {
    const SpeciesTable cfg({1.4}, {1.0}, 0.0);
    const Semidiscretization sd = square_sd(cfg, 3);

    auto constant = field(sd, [](double, double) { return Vec3<double>(0.2, -0.7, 0.4); });
    DivergenceError d = divergence_error(constant, sd);
    CHECK(d.l2 < 1e-13);
    CHECK(d.linf < 1e-13);

    auto rotation = field(sd, [](double x, double y) { return Vec3<double>(y, x, 0.0); });
    d = divergence_error(rotation, sd);
    CHECK(d.l2 < 1e-12);

    auto source = field(sd, [](double x, double y) { return Vec3<double>(x, y, 1.0); });
    d = divergence_error(source, sd);
    CHECK(d.l2 == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(d.linf == doctest::Approx(2.0).epsilon(1e-12));

    // broken derivative: a jump between elements is invisible
    GridFunction jump = field(sd, [](double, double) { return Vec3<double>(1.0, 0.0, 0.0); });
    for (int c = 0; c < sd.nodes_per_element(); ++c) jump(idx::B(1, 0), sd.node_index(4, 0) + c) = 2.0;
    CHECK(divergence_error(jump, sd).linf < 1e-12);

    const Semidiscretization line = square_sd(cfg, 4, 3, 1);
    const GridFunction u1 = line.interpolate([&](double, double) { return rest_state(cfg, Vec3<double>(1, 0, 0)); });
    CHECK_THROWS_AS(divergence_error(u1, line), Requires2D);
    CHECK_THROWS_AS(poloidal_energy(u1, line, 1.0), Requires2D);
}

TEST_CASE("poloidal energy of the shear layer") {
    const Scenario k = khi();
    const Semidiscretization sd(build_mesh(2, k.lo, k.hi, 4, k.boundary), lgl_basis(3), k.species, kEcKernels,
                                kEsKernels);
    const GridFunction u = sd.interpolate(k.initial);
    const double ref = poloidal_integral(u, sd);
    CHECK(ref == doctest::Approx(0.05 * 0.05 * 4.0).epsilon(1e-12));
    CHECK(poloidal_energy(u, sd, ref) == doctest::Approx(1.0));
    CHECK_THROWS_AS(poloidal_energy(u, sd, 0.0), ZeroReference);
}

TEST_CASE("momentum and energy totals") {
    const SpeciesTable cfg({1.4, 5.0 / 3.0}, {1.0, 2.0}, 0.0);
    const Semidiscretization sd = square_sd(cfg, 2);
    const State<double> s = rest_state(cfg, Vec3<double>(0.3, 0.1, -0.2));
    const GridFunction u = sd.interpolate([&](double, double) { return s; });

    Vec3<double> m = Vec3<double>::Zero();
    for (int k = 0; k < 2; ++k) m += s.segment<3>(idx::mom(k, 0));
    CHECK((total_momentum(u, sd) - 4.0 * m).norm() < 1e-13);

    const double mag = 0.5 * s.segment<3>(idx::B(2, 0)).squaredNorm();
    const double E = s(idx::energy(0)) + s(idx::energy(1)) - mag;
    CHECK(total_energy(u, sd) == doctest::Approx(4.0 * E).epsilon(1e-13));

    const Eigen::VectorXd q = integrate(u, sd);
    CHECK((q - 4.0 * Eigen::VectorXd(s)).norm() < 1e-12);
}

TEST_CASE("diagnostics series needs increasing times") {
    DiagnosticsSeries s;
    CHECK(s.empty());
    DiagnosticsSample a;
    a.t = 0.0;
    s.push(a);
    a.t = 0.5;
    s.push(a);
    CHECK(s.size() == 2);
    CHECK_THROWS_AS(s.push(a), Error);
    a.t = 0.1;
    CHECK_THROWS_AS(s.push(a), Error);
    CHECK(s.back().t == 0.5);
}
