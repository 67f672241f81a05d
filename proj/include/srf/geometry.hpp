#pragma once

#include "srf/background.hpp"

#include <cstdint>

namespace srf {

/// A basic potential as a grid profile with cached s-derivatives
/// (d/ds = x(1-x) d/dx). Endpoint regularity phi'_s -> 0 holds by
/// construction since x(1-x) vanishes at the end nodes.
struct PotentialProfile {
    Profile values;
    Profile ds;   ///< phi'_s
    Profile dss;  ///< phi''_s
};

/// Builds a PotentialProfile on the background grid (fills the caches).
PotentialProfile make_potential(const Background& bg, Profile values);

/// Metric data of an admissible density. `ratio` is W/(x(1-x)) (the measure
/// density in x); `W` the s-density itself; `R` the transverse scalar
/// curvature; `h` the transverse Ricci potential normalized by
/// int e^h d(mu) = V.
struct MetricData {
    Profile ratio;
    Profile W;
    Profile R;
    Profile h;
};

/// W = W0 + phi''_s in ratio form; throws PositivityViolation (with the
/// offending node) if the density is not positive everywhere. Fills R and h.
MetricData metric_density(const Background& bg, const PotentialProfile& phi);

/// Ratio density of a potential without curvature/potential evaluation.
Profile density_ratio(const Background& bg, const Profile& phi);

/// R = -(log W)''_s / W, computed in the endpoint-regular form
/// (2 - L log rho)/rho; R(W0) = n*kappa exactly.
Profile scalar_curvature(const Background& bg, const Profile& ratio);

/// Laplace-Beltrami of f in the metric with density ratio `rho`:
/// Delta f = f''_s / W = (L f)/rho.
Profile laplacian(const Background& bg, const Profile& ratio, const Profile& f);

/// Result of the two-point Ricci potential solve.
struct RicciPotential {
    Profile h;               ///< normalized so (1/V) int e^h d(mu) = 1
    double solvability = 0;  ///< integral of the right-hand side (0 analytically)
};

/// Solves the reduced two-point problem for the transverse Ricci potential of
/// the density `ratio` over the Einstein background, with decaying-derivative
/// boundary behavior, then shifts the constant so int e^h d(mu) = V.
/// Throws SolvabilityResidualExceeded if |int RHS| > 1e-6.
RicciPotential transverse_ricci_potential(const Background& bg, const Profile& ratio);

/// (1/V) int f d(mu) in the metric with density ratio `rho`.
double integrate(const Background& bg, const Profile& ratio, const Profile& f);

/// (1/V) int |grad f|^2 d(mu); metric-independent in 2d up to the volume
/// normalization, and satisfies grad_norm_sq(f) = -(1/V) int f (Delta f) d(mu)
/// exactly at the discrete level.
double grad_norm_sq(const Background& bg, const Profile& f);

/// Symmetry class of sampled potentials.
enum class Sector { Even, Full };

struct SampleSpec {
    int mode_count = 4;
    double amplitude = 0.25;
    Sector sector = Sector::Even;
};

/// Draws a smooth admissible potential: a truncated Legendre series in
/// (2x-1) (even degrees only in the even class), rescaled by bisection until
/// the admissibility margin is at least 0.1 * min W0 (in ratio form).
/// Deterministic in the seed. Throws SamplingFailed after 100 attempts.
PotentialProfile sample_potential(const Background& bg, const SampleSpec& spec,
                                  std::uint64_t seed);

/// Lowest eigenvalues of -(Delta_W + kappa) on mean-zero profiles of the
/// sector: dense symmetric eigensolve in the mean-zero Legendre basis with
/// the grid quadrature (spurious-free for the degenerate endpoint weight).
std::vector<double> linearized_spectrum(const Background& bg, const Profile& ratio,
                                        Sector sector, int count = 8);

/// Smallest eigenvalue of the even/full sector (convenience).
double spectral_gap(const Background& bg, const Profile& ratio, Sector sector);

/// Legendre polynomial P_k(2x-1) sampled on the grid.
Profile legendre_profile(const Background& bg, int k);

} // namespace srf
