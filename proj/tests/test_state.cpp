#include <doctest.h>

#include <cmath>

#include "mimhd/sampling.hpp"
#include "mimhd/scenarios.hpp"
#include "mimhd/state.hpp"

using namespace mimhd;

namespace {

State<double> single(double rho, Vec3<double> m, double E, Vec3<double> B, double psi) {
    State<double> u(9);
    u << rho, m(0), m(1), m(2), E, B(0), B(1), B(2), psi;
    return u;
}

double rel_diff(const State<double>& a, const State<double>& b) {
    return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

} // namespace

TEST_CASE("species table validation") {
    CHECK_NOTHROW(SpeciesTable({5.0 / 3.0}, {1.0}, 0.0));
    CHECK_THROWS_AS(SpeciesTable({1.0}, {1.0}, 0.0), InvalidSpecies);
    CHECK_THROWS_AS(SpeciesTable({1.4, 1.4}, {0.0, -1.0}, 0.0), InvalidSpecies);
    CHECK_THROWS_AS(SpeciesTable({1.4}, {1.0}, -0.1), InvalidSpecies);
    CHECK_THROWS_AS(SpeciesTable({1.4, 1.4}, {1.0}, 0.0), InvalidSpecies);
    CHECK_THROWS_AS(SpeciesTable({1.4, 1.4, 1.4, 1.4, 1.4}, {1, 1, 1, 1, 1}, 0.0), InvalidSpecies);
    CHECK(n_vars(2) == 14);
}

TEST_CASE("cons_to_prim hand values") {
    SpeciesTable c1({5.0 / 3.0}, {1.0}, 0.0);
    auto q = cons_to_prim(single(1, {0, 0, 0}, 1.5, {0, 0, 0}, 0), c1);
    CHECK(q.p[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(q.v[0].norm() == 0.0);

    SpeciesTable c2({2.0}, {1.0}, 0.0);
    q = cons_to_prim(single(1, {1, 0, 0}, 1.5, {1, 0, 0}, 0), c2);
    CHECK(q.p[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q.v[0](0) == doctest::Approx(1.0));
    CHECK(rel_diff(prim_to_cons(q, c2), single(1, {1, 0, 0}, 1.5, {1, 0, 0}, 0)) < 1e-15);
}

TEST_CASE("inadmissible states are rejected") {
    SpeciesTable c({2.0}, {1.0}, 0.0);
    CHECK_THROWS_AS(cons_to_prim(single(0.0, {0, 0, 0}, 1, {0, 0, 0}, 0), c), NonPositiveDensity);
    CHECK_THROWS_AS(cons_to_prim(single(1.0, {0, 0, 0}, 0.5, {1, 0, 0}, 0), c), NonPositivePressure);
    Primitive<double> q;
    q.n_species = 1;
    q.rho[0] = 1.0;
    q.p[0] = 0.0;
    CHECK_THROWS_AS(prim_to_cons(q, c), NonPositivePressure);
    q.p[0] = 1.0;
    q.rho[0] = -1.0;
    CHECK_THROWS_AS(prim_to_cons(q, c), NonPositiveDensity);
}

TEST_CASE("manufactured state at the origin round-trips") {
    const Scenario sc = manufactured();
    const State<double> u = sc.exact(0.0, 0.0, 0.0);
    const auto q = cons_to_prim(u, sc.species);
    CHECK(q.rho[0] == doctest::Approx(1.0));
    CHECK(q.rho[1] == doctest::Approx(1.0));
    CHECK(q.B(0) == doctest::Approx(0.5));
    CHECK(q.B(1) == doctest::Approx(-0.5));
    CHECK(q.B(2) == doctest::Approx(0.2));
    CHECK(q.psi == 0.0);
    CHECK(rel_diff(prim_to_cons(q, sc.species), u) < 1e-14);
}

TEST_CASE("entropy variables hand values") {
    SpeciesTable c({2.0}, {1.0}, 0.0);
    const State<double> u = single(1, {0, 0, 0}, 0.5, {0, 0, 0}, 0);
    const auto w = cons_to_entropy(u, c);
    CHECK(w(0) == doctest::Approx(2.0 - std::log(0.5)).epsilon(1e-15));
    CHECK(w(1) == 0.0);
    CHECK(w(4) == doctest::Approx(-2.0));
    CHECK(w.tail(4).cwiseAbs().maxCoeff() == 0.0);
    CHECK(rel_diff(entropy_to_cons(w, c), u) < 1e-14);
}

TEST_CASE("magnetic entropy slot carries 2 beta_plus") {
    SpeciesTable c({2.0, 2.0}, {1.0, 1.0}, 0.0);
    Primitive<double> q;
    q.n_species = 2;
    q.rho = {1.0, 1.0};
    q.p = {0.5, 1.0}; // beta_k = rho/(2p) = 1, 0.5
    q.B = Vec3<double>(0.3, -0.2, 0.7);
    q.psi = 0.1;
    const auto w = prim_to_entropy(q, c);
    for (int m = 0; m < 3; ++m) CHECK(w(idx::B(2, m)) == doctest::Approx(3.0 * q.B(m)));
    CHECK(w(idx::psi(2)) == doctest::Approx(0.3));
}

TEST_CASE("entropy_to_cons rejects non-positive temperature slot") {
    SpeciesTable c({2.0}, {1.0}, 0.0);
    EntropyVars<double> w(9);
    w << 1.0, 0, 0, 0, 0.5, 0, 0, 0, 0;
    CHECK_THROWS_AS(entropy_to_cons(w, c), InvalidEntropyState);
}

TEST_CASE("random round trips") {
    StateSampler rng(7);
    double worst_prim = 0.0, worst_w = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SpeciesTable c = rng.species(1 + i % kMaxSpecies);
        const State<double> u = rng.state(c);
        worst_prim = std::max(worst_prim, rel_diff(prim_to_cons(cons_to_prim(u, c), c), u));
        worst_w = std::max(worst_w, rel_diff(entropy_to_cons(cons_to_entropy(u, c), c), u));
    }
    CHECK(worst_prim <= 1e-13);
    CHECK(worst_w <= 1e-12);
}

TEST_CASE("mathematical entropy") {
    SpeciesTable c({2.0}, {1.0}, 0.0);
    CHECK(math_entropy(single(1, {0, 0, 0}, 1.0, {0, 0, 0}, 0), c) == doctest::Approx(0.0));

    SpeciesTable c2({1.4, 1.4}, {1.0, 1.0}, 0.0);
    SpeciesTable c1({1.4}, {1.0}, 0.0);
    State<double> u1 = single(0.7, {0.1, -0.2, 0.3}, 3.0, {0.2, 0.4, -0.1}, 0.05);
    State<double> u2(14);
    u2 << u1.head(5), u1.head(5), u1.tail(4);
    CHECK(math_entropy(u2, c2) == doctest::Approx(2.0 * math_entropy(u1, c1)).epsilon(1e-14));

    // closed form at the manufactured origin: S = -sum rho_k s_k/(gamma_k - 1)
    const Scenario sc = manufactured();
    const auto q = cons_to_prim(sc.exact(0, 0, 0), sc.species);
    double S = 0.0;
    for (int k = 0; k < 2; ++k) {
        const double g = sc.species.g(k);
        S -= q.rho[k] * (std::log(q.p[k]) - g * std::log(q.rho[k])) / (g - 1.0);
    }
    CHECK(math_entropy(sc.exact(0, 0, 0), sc.species) == doctest::Approx(S).epsilon(1e-14));
}

TEST_CASE("entropy flux") {
    SpeciesTable c({2.0}, {1.0}, 0.0);
    const State<double> rest = single(1.3, {0, 0, 0}, 2.0, {0.1, 0.2, 0.3}, 0.1);
    for (int d = 0; d < 3; ++d) CHECK(entropy_flux(rest, c, d) == 0.0);
    const State<double> moving = single(1.0, {1, 0, 0}, 2.0, {0, 0, 0}, 0);
    CHECK(entropy_flux(moving, c, 0) == doctest::Approx(math_entropy(moving, c)).epsilon(1e-15));
    CHECK(entropy_flux(moving, c, 1) == 0.0);
}
