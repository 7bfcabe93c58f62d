#ifndef MIMHD_DIAGNOSTICS_HPP
#define MIMHD_DIAGNOSTICS_HPP

#include <array>
#include <functional>
#include <vector>

#include "mimhd/dgsem.hpp"

namespace mimhd {

using ExactFn = std::function<State<double>(double x, double y, double t)>;

/// Per-variable sqrt of the quadrature integral of (u - exact)^2.
std::vector<double> l2_error(const GridFunction& u, const ExactFn& exact, double t, const Semidiscretization& sd);

/// l2_error divided by sqrt(|domain|), i.e. a root-mean-square error.
std::vector<double> rms_error(const GridFunction& u, const ExactFn& exact, double t, const Semidiscretization& sd);

/// Root-mean-square error with the solution interpolated to an LGL grid of degree
/// `analysis_degree` in every element (default 2N) before integration.
std::vector<double> rms_error_interpolated(const GridFunction& u, const ExactFn& exact, double t,
                                           const Semidiscretization& sd, int analysis_degree = -1);

/// log2 ratios of consecutive errors under mesh doubling.
std::vector<double> eoc(const std::vector<double>& errors);
double mean(const std::vector<double>& values);

double total_entropy(const GridFunction& u, const Semidiscretization& sd);
double total_entropy_rate(const GridFunction& u, const GridFunction& dudt, const Semidiscretization& sd);

struct DivergenceError {
    double l2 = 0.0;
    double linf = 0.0;
};

/// Broken collocation divergence of B, element by element, without interface terms.
DivergenceError divergence_error(const GridFunction& u, const Semidiscretization& sd);

/// Integral of B_1^2 + B_2^2.
double poloidal_integral(const GridFunction& u, const Semidiscretization& sd);
double poloidal_energy(const GridFunction& u, const Semidiscretization& sd, double reference);

Vec3<double> total_momentum(const GridFunction& u, const Semidiscretization& sd);

/// Integral of sum_k E_k - (N_i - 1)(|B|^2 + psi^2)/2, which counts the field energy once.
double total_energy(const GridFunction& u, const Semidiscretization& sd);

/// Integral of each conservative row.
Eigen::VectorXd integrate(const GridFunction& u, const Semidiscretization& sd);

struct DiagnosticsSample {
    double t = 0.0;
    double dt = 0.0;
    double entropy = 0.0;
    double entropy_rate = 0.0;
    double divB_l2 = 0.0;
    double divB_linf = 0.0;
    double poloidal = 0.0;
    Vec3<double> momentum = Vec3<double>::Zero();
    double energy = 0.0;
};

class DiagnosticsSeries {
  public:
    void push(const DiagnosticsSample& s);
    const std::vector<DiagnosticsSample>& samples() const { return samples_; }
    bool empty() const { return samples_.empty(); }
    std::size_t size() const { return samples_.size(); }
    const DiagnosticsSample& back() const { return samples_.back(); }

  private:
    std::vector<DiagnosticsSample> samples_;
};

} // namespace mimhd

#endif
