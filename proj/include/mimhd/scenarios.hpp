#ifndef MIMHD_SCENARIOS_HPP
#define MIMHD_SCENARIOS_HPP

#include <functional>
#include <string>
#include <vector>

#include "mimhd/diagnostics.hpp"

namespace mimhd {

using InitialFn = std::function<State<double>(double x, double y)>;

struct Scenario {
    std::string name;
    SpeciesTable species;
    int dim = 2;
    std::array<double, 2> lo{-1.0, -1.0};
    std::array<double, 2> hi{1.0, 1.0};
    std::array<BoundaryKind, 4> boundary{BoundaryKind::periodic, BoundaryKind::periodic, BoundaryKind::periodic,
                                         BoundaryKind::periodic};
    InitialFn initial;
    ExactFn exact;   // empty if unknown
    SourceFn source; // empty if none
    double t_end = 0.0;
    double cfl = 0.5;
    double nu = 0.5;
    int degree = 3;
    int elements = 16;
};

/// Smooth two-species solution travelling along x + y, with the matching source.
Scenario manufactured();

/// Two-species magnetized weak blast in [-2, 2]^2.
Scenario weak_blast();

/// Two-species magnetized Kelvin-Helmholtz shear layer with slip walls in y.
Scenario khi();

Scenario scenario_by_name(const std::string& name);
std::vector<std::string> scenario_names();

} // namespace mimhd

#endif
