#include "mimhd/scenarios.hpp"

#include <cmath>
#include <numbers>

namespace mimhd {

namespace {

constexpr double pi = std::numbers::pi;

State<double> manufactured_state(double x, double y, double t) {
    const double sn = std::sin(pi * (x + y - t));
    const double chi = 0.1 * sn + 2.0;
    const double chi1 = 0.04 * sn + 1.0;
    const double chi2 = chi - chi1;
    State<double> u(n_vars(2));
    const double c[2] = {chi1, chi2};
    for (int k = 0; k < 2; ++k) {
        u(idx::rho(k)) = c[k];
        u(idx::mom(k, 0)) = c[k];
        u(idx::mom(k, 1)) = c[k];
        u(idx::mom(k, 2)) = 0.1 * c[k];
        u(idx::energy(k)) = 2.0 * c[k] * c[k] + c[k];
    }
    u(idx::B(2, 0)) = 0.25 * chi;
    u(idx::B(2, 1)) = -0.25 * chi;
    u(idx::B(2, 2)) = 0.1 * chi;
    u(idx::psi(2)) = 0.0;
    return u;
}

State<double> manufactured_source(double x, double y, double t) {
    const double c0 = 0.1 * std::sin(pi * (x + y - t));
    const double cx = 0.1 * pi * std::cos(pi * (x + y - t));
    const double c02 = c0 * c0;
    State<double> s(n_vars(2));
    s(0) = 2.0 * cx / 5.0;
    s(1) = (38055.0 * cx * c02 + 185541.0 * cx * c0 + 220190.0 * cx) / (35000.0 * c0 + 75000.0);
    s(2) = s(1);
    s(3) = cx / 25.0;
    s(4) = (1835811702576186755.0 * cx * c02 + 8592627463681183181.0 * cx * c0 + 9884050459977240490.0 * cx) /
           (652252660543767500.0 * c0 + 1397684272593787500.0);
    s(5) = 3.0 * cx / 5.0;
    s(6) = (76155.0 * cx * c02 + 295306.0 * cx * c0 + 284435.0 * cx) / (17500.0 * c0 + 37500.0);
    s(7) = s(6);
    s(8) = 3.0 * cx / 50.0;
    s(9) = (88755.0 * cx * c02 + 338056.0 * cx * c0 + 318185.0 * cx) / (8750.0 * c0 + 18750.0);
    s(10) = cx / 4.0;
    s(11) = -cx / 4.0;
    s(12) = cx / 10.0;
    s(13) = 0.0;
    return s;
}

} // namespace

Scenario manufactured() {
    Scenario s;
    s.name = "manufactured";
    s.species = SpeciesTable({2.0, 4.0}, {2.0, 1.0}, 0.2);
    s.lo = {-1.0, -1.0};
    s.hi = {1.0, 1.0};
    s.exact = manufactured_state;
    s.source = manufactured_source;
    s.initial = [](double x, double y) { return manufactured_state(x, y, 0.0); };
    s.t_end = 1.0;
    s.degree = 3;
    s.elements = 16;
    return s;
}

Scenario weak_blast() {
    Scenario s;
    s.name = "weak_blast";
    s.species = SpeciesTable({2.0, 4.0}, {2.0, 1.0}, 0.2);
    s.lo = {-2.0, -2.0};
    s.hi = {2.0, 2.0};
    const SpeciesTable cfg = s.species;
    s.initial = [cfg](double x, double y) {
        const int ns = cfg.n_species;
        const double r = std::hypot(x, y);
        const double phi = std::atan2(y, x);
        const bool inside = r <= 0.5;
        const double rho0 = inside ? 1.1691 : 1.0;
        Primitive<double> q;
        q.n_species = ns;
        for (int k = 0; k < ns; ++k) {
            q.rho[k] = -std::pow(2.0, k) / (1.0 - std::pow(2.0, ns)) * rho0;
            q.p[k] = inside ? 1.245 : 1.0;
            q.v[k] = inside ? Vec3<double>(0.1882 * std::cos(phi), 0.1882 * std::sin(phi), 0.0) : Vec3<double>::Zero();
        }
        q.B = Vec3<double>(1.0, 1.0, 1.0);
        q.psi = 0.0;
        return prim_to_cons(q, cfg);
    };
    s.t_end = 0.4;
    s.degree = 3;
    s.elements = 16;
    return s;
}

Scenario khi() {
    Scenario s;
    s.name = "khi";
    s.species = SpeciesTable({5.0 / 3.0, 1.4}, {1.0, 0.5}, 0.0);
    s.lo = {-1.0, -1.0};
    s.hi = {1.0, 1.0};
    s.boundary = {BoundaryKind::periodic, BoundaryKind::periodic, BoundaryKind::slip_wall, BoundaryKind::slip_wall};
    const SpeciesTable cfg = s.species;
    s.initial = [cfg](double x, double y) {
        constexpr double y0 = 1.0 / 20.0;
        constexpr double c_a = 0.1;
        constexpr double theta = pi / 3.0;
        constexpr double v20 = 0.01;
        constexpr double sigma = 0.1;
        Primitive<double> q;
        q.n_species = cfg.n_species;
        const Vec3<double> v(0.5 * std::tanh(y / y0), v20 * std::sin(2.0 * pi * x) * std::exp(-y * y / (sigma * sigma)),
                             0.0);
        for (int k = 0; k < cfg.n_species; ++k) {
            q.rho[k] = 0.5;
            q.p[k] = 1.0 / cfg.g(k);
            q.v[k] = v;
        }
        q.B = Vec3<double>(c_a * std::cos(theta), 0.0, c_a * std::sin(theta));
        q.psi = 0.0;
        return prim_to_cons(q, cfg);
    };
    s.t_end = 20.0;
    s.degree = 3;
    s.elements = 64;
    return s;
}

Scenario scenario_by_name(const std::string& name) {
    if (name == "manufactured") return manufactured();
    if (name == "weak_blast") return weak_blast();
    if (name == "khi") return khi();
    throw ConfigError("unknown scenario '" + name + "'");
}

std::vector<std::string> scenario_names() { return {"manufactured", "weak_blast", "khi"}; }

} // namespace mimhd
