#ifndef MIMHD_MESH_HPP
#define MIMHD_MESH_HPP

#include <array>
#include <string>

#include "mimhd/errors.hpp"

namespace mimhd {

enum class BoundaryKind { periodic, slip_wall };

/// Sides in the order x-low, x-high, y-low, y-high.
enum Side { x_lo = 0, x_hi = 1, y_lo = 2, y_hi = 3 };

/// Uniform Cartesian mesh in 1D or 2D. Elements are numbered x-fastest.
struct CartesianMesh {
    int dim = 2;
    int n_elements = 1; // per direction
    std::array<double, 2> lo{-1.0, -1.0};
    std::array<double, 2> hi{1.0, 1.0};
    double h = 2.0;
    std::array<BoundaryKind, 4> boundary{BoundaryKind::periodic, BoundaryKind::periodic, BoundaryKind::periodic,
                                         BoundaryKind::periodic};

    int total_elements() const { return dim == 1 ? n_elements : n_elements * n_elements; }
    double jacobian() const { return 0.5 * h; }
    int element_x(int e) const { return e % n_elements; }
    int element_y(int e) const { return dim == 1 ? 0 : e / n_elements; }
    double element_lo(int e, int d) const { return lo[d] + h * (d == 0 ? element_x(e) : element_y(e)); }

    /// Neighbor across a side, or -1 at a wall.
    int neighbor(int e, Side side) const;

    /// Number of distinct element faces (periodic wraps counted once).
    int interface_count() const;
};

CartesianMesh build_mesh(int dim, std::array<double, 2> lo, std::array<double, 2> hi, int n_elements,
                         std::array<BoundaryKind, 4> boundary);

BoundaryKind parse_boundary(const std::string& name);
std::string to_string(BoundaryKind kind);

} // namespace mimhd

#endif
