#ifndef MIMHD_SAMPLING_HPP
#define MIMHD_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "mimhd/state.hpp"

namespace mimhd {

/// Seeded generator of admissible states: rho_k, p_k in [0.1, 2], v and B in [-1, 1]^3, psi in [-0.5, 0.5].
class StateSampler {
  public:
    explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

    SpeciesTable species(int n_species) {
        SpeciesTable cfg;
        cfg.n_species = n_species;
        for (int k = 0; k < n_species; ++k) {
            cfg.gamma[k] = uniform(1.1, 4.0);
            cfg.charge_to_mass[k] = uniform(0.2, 2.0);
        }
        cfg.electron_pressure_alpha = uniform(0.0, 0.5);
        cfg.validate();
        return cfg;
    }

    Primitive<double> primitive(const SpeciesTable& cfg) {
        Primitive<double> q;
        q.n_species = cfg.n_species;
        for (int k = 0; k < cfg.n_species; ++k) {
            q.rho[k] = uniform(0.1, 2.0);
            q.p[k] = uniform(0.1, 2.0);
            q.v[k] = vec(-1.0, 1.0);
        }
        q.B = vec(-1.0, 1.0);
        q.psi = uniform(-0.5, 0.5);
        return q;
    }

    State<double> state(const SpeciesTable& cfg) { return prim_to_cons(primitive(cfg), cfg); }

  private:
    Vec3<double> vec(double a, double b) { return Vec3<double>(uniform(a, b), uniform(a, b), uniform(a, b)); }

    std::mt19937_64 rng_;
};

} // namespace mimhd

#endif
