#include "mimhd/mesh.hpp"

#include <cmath>

#include "mimhd/errors.hpp"

namespace mimhd {

int CartesianMesh::neighbor(int e, Side side) const {
    const int ex = element_x(e);
    const int ey = element_y(e);
    const int n = n_elements;
    auto wrap = [&](int i, BoundaryKind kind) { return kind == BoundaryKind::periodic ? (i + n) % n : -1; };
    int nx = ex;
    int ny = ey;
    switch (side) {
    case x_lo:
        nx = ex == 0 ? wrap(-1, boundary[x_lo]) : ex - 1;
        break;
    case x_hi:
        nx = ex == n - 1 ? wrap(n, boundary[x_hi]) : ex + 1;
        break;
    case y_lo:
        ny = ey == 0 ? wrap(-1, boundary[y_lo]) : ey - 1;
        break;
    case y_hi:
        ny = ey == n - 1 ? wrap(n, boundary[y_hi]) : ey + 1;
        break;
    }
    if (nx < 0 || ny < 0) return -1;
    return dim == 1 ? nx : ny * n + nx;
}

int CartesianMesh::interface_count() const {
    const int n = n_elements;
    const int per_line_x = boundary[x_lo] == BoundaryKind::periodic ? n : n + 1;
    if (dim == 1) return per_line_x;
    const int per_line_y = boundary[y_lo] == BoundaryKind::periodic ? n : n + 1;
    return per_line_x * n + per_line_y * n;
}

CartesianMesh build_mesh(int dim, std::array<double, 2> lo, std::array<double, 2> hi, int n_elements,
                         std::array<BoundaryKind, 4> boundary) {
    if (dim != 1 && dim != 2) throw InvalidDomain("dimension must be 1 or 2");
    if (n_elements < 1) throw InvalidDomain("need at least one element per direction");
    for (int d = 0; d < dim; ++d)
        if (!(hi[d] > lo[d])) throw InvalidDomain("domain upper bound must exceed lower bound");
    if (dim == 2 && std::abs((hi[0] - lo[0]) - (hi[1] - lo[1])) > 1e-12 * (hi[0] - lo[0]))
        throw InvalidDomain("2D meshes need equal extents so that dx = dy");
    for (int d = 0; d < dim; ++d)
        if ((boundary[2 * d] == BoundaryKind::periodic) != (boundary[2 * d + 1] == BoundaryKind::periodic))
            throw InvalidDomain("periodicity must be set on both sides of a direction");
    CartesianMesh m;
    m.dim = dim;
    m.n_elements = n_elements;
    m.lo = lo;
    m.hi = hi;
    m.h = (hi[0] - lo[0]) / n_elements;
    m.boundary = boundary;
    if (dim == 1) {
        m.lo[1] = m.hi[1] = 0.0;
        m.boundary[y_lo] = m.boundary[y_hi] = BoundaryKind::periodic;
    }
    return m;
}

BoundaryKind parse_boundary(const std::string& name) {
    if (name == "periodic") return BoundaryKind::periodic;
    if (name == "slip_wall") return BoundaryKind::slip_wall;
    throw ConfigError("unknown boundary kind '" + name + "'");
}

std::string to_string(BoundaryKind kind) {
    return kind == BoundaryKind::periodic ? "periodic" : "slip_wall";
}

} // namespace mimhd
