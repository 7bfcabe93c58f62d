#ifndef MIMHD_DGSEM_HPP
#define MIMHD_DGSEM_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "mimhd/basis.hpp"
#include "mimhd/kernels.hpp"
#include "mimhd/mesh.hpp"

namespace mimhd {

/// One column per LGL node; nodes are element-major, x-fastest inside an element.
using GridFunction = Eigen::MatrixXd;

/// Point source s(x, y, t) added to du/dt.
using SourceFn = std::function<State<double>(double x, double y, double t)>;

struct GlmSettings {
    bool enabled = true;
    double c_h = 0.0;
};

class Semidiscretization {
  public:
    Semidiscretization(CartesianMesh mesh, LGLBasis basis, SpeciesTable cfg, KernelPair volume, KernelPair surface,
                       GlmSettings glm = {}, SourceFn source = {});

    const CartesianMesh& mesh() const { return mesh_; }
    const LGLBasis& basis() const { return basis_; }
    const SpeciesTable& species() const { return cfg_; }
    const KernelPair& volume_kernels() const { return volume_; }
    const KernelPair& surface_kernels() const { return surface_; }
    const GlmSettings& glm() const { return glm_; }
    const SourceFn& source() const { return source_; }

    /// Cleaning speed used by all kernels; forced to zero while GLM is disabled.
    void set_cleaning_speed(double c_h) { glm_.c_h = glm_.enabled ? c_h : 0.0; }
    double cleaning_speed() const { return glm_.c_h; }

    int nodes_per_element() const { return mesh_.dim == 1 ? basis_.n_nodes() : basis_.n_nodes() * basis_.n_nodes(); }
    int total_nodes() const { return mesh_.total_elements() * nodes_per_element(); }
    int node_index(int e, int i, int j = 0) const {
        return e * nodes_per_element() + j * basis_.n_nodes() + i;
    }
    double node_x(int e, int i) const { return mesh_.element_lo(e, 0) + 0.5 * mesh_.h * (basis_.nodes(i) + 1.0); }
    double node_y(int e, int j) const {
        return mesh_.dim == 1 ? 0.0 : mesh_.element_lo(e, 1) + 0.5 * mesh_.h * (basis_.nodes(j) + 1.0);
    }
    /// Quadrature weight of node (i, j) including the mapping Jacobian.
    double node_weight(int i, int j = 0) const;

    /// du/dt for the whole grid at time t. Throws AdmissibilityLost on inadmissible nodes.
    void rhs(const GridFunction& u, double t, GridFunction& dudt) const;
    GridFunction rhs(const GridFunction& u, double t) const;

    /// Node-wise derived quantities of the last rhs evaluation (refreshed by update_point_states).
    const std::vector<PointState<double>>& point_states() const { return cache_; }
    void update_point_states(const GridFunction& u) const;

    /// Sample a pointwise function at every node.
    GridFunction interpolate(const std::function<State<double>(double, double)>& fn) const;

  private:
    void volume_sweep(const GridFunction& u, int e, int line, int dir, GridFunction& dudt) const;
    void surface_terms(const GridFunction& u, int e, int line, int dir, GridFunction& dudt) const;

    CartesianMesh mesh_;
    LGLBasis basis_;
    SpeciesTable cfg_;
    KernelPair volume_;
    KernelPair surface_;
    GlmSettings glm_;
    SourceFn source_;
    mutable std::vector<PointState<double>> cache_;
};

/// Reflect normal velocity of every species and the normal magnetic field.
State<double> slip_wall_state(const State<double>& u_in, const Vec3<double>& n, const SpeciesTable& cfg);

/// sum_j J w_j w(u_j) . du_j/dt over one element.
double element_entropy_rate(const GridFunction& u, const GridFunction& dudt, const Semidiscretization& sd, int e);

} // namespace mimhd

#endif
