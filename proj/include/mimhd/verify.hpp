#ifndef MIMHD_VERIFY_HPP
#define MIMHD_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mimhd {

struct PropertyResult {
    std::string name;
    bool pass = true;
    double worst = 0.0;     // worst observed value of the checked quantity
    double tolerance = 0.0; // pass threshold for `worst`
    long samples = 0;
};

/// Max over random pairs and both directions of |r| / (|Psi_L| + |Psi_R| + 1) for the EC kernels.
PropertyResult verify_shuffle_condition(std::uint64_t seed, long samples);
/// Min eigenvalue of the assembled dissipation matrix (Cholesky must succeed); species counts 1..3.
PropertyResult verify_dissipation_spd(std::uint64_t seed, long samples);
/// Max relative mismatch between every kernel at (u, u) and its analytic counterpart.
PropertyResult verify_kernel_consistency(std::uint64_t seed, long samples);
/// Max relative round-trip error of cons <-> prim and cons <-> entropy.
PropertyResult verify_round_trips(std::uint64_t seed, long samples);
/// Max of |Q + Q^T - B| over N = 1..15.
PropertyResult verify_sbp_identity();
/// Max scaled quadrature error on monomials of degree <= 2N - 1, N = 1..15.
PropertyResult verify_quadrature_exactness();
/// Max positive entropy production of the ES kernels (must be <= 0 up to roundoff).
PropertyResult verify_es_sign(std::uint64_t seed, long samples);

std::vector<PropertyResult> verify_all(std::uint64_t seed, long samples);

} // namespace mimhd

#endif
