#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace srf {

using Profile = std::vector<double>;

enum class Normalization { Unit, Sasaki };

/// Reduced geometry parameters. n is the transverse complex dimension and is
/// fixed to 1 in this testbed; grid_nodes must be odd and >= 65 so that
/// x = 1/2 is a node and antipodal symmetrization is exact.
struct GeometryConfig {
    int n = 1;
    Normalization normalization = Normalization::Unit;
    int grid_nodes = 513;
    std::string quadrature = "sbp4"; // rule identifier; sbp4 is the only rule
};

/// The fixed S^1-invariant background on the 2-sphere, discretized on a
/// uniform grid in the moment coordinate x in [0,1].
///
/// All structures live in ratio-density form: a metric density W (per unit of
/// the cylinder coordinate s = log(x/(1-x))) is stored as rho = W/(x(1-x)),
/// so the measure is d(mu) = rho dx and the round background has constant
/// rho0 (2 in unit normalization, 1/2 in sasaki). Derivatives in s reduce to
/// the Legendre-type operator L f = (x(1-x) f_x)_x via the chain rule.
///
/// The difference operator D is a summation-by-parts pair with the diagonal
/// quadrature H (interior 4th order), which makes integration by parts,
/// Gauss-Bonnet and operator self-adjointness exact at the discrete level.
class Background {
public:
    GeometryConfig config;
    int N = 0;           ///< grid nodes
    double dx = 0.0;
    double kappa = 1.0;  ///< normalization constant (1 or 2n+2)
    double rho0 = 2.0;   ///< constant background ratio density
    double V = 2.0;      ///< total volume of d(mu0)

    Profile x;           ///< grid nodes in [0,1]
    Profile X;           ///< x(1-x)
    Profile Hw;          ///< quadrature weights (includes dx)
    Profile h0;          ///< background transverse Ricci potential (identically 0)

    // -- difference operator ------------------------------------------------
    /// y = D f (x-derivative).
    void deriv(const Profile& f, Profile& y) const;
    Profile deriv(const Profile& f) const;
    /// f'_s = x(1-x) D f.
    Profile deriv_s(const Profile& f) const;
    /// L f = D(X D f); equals f''_s / (x(1-x)).
    void lop(const Profile& f, Profile& y, Profile& work) const;
    Profile lop(const Profile& f) const;

    // -- quadrature ----------------------------------------------------------
    /// Plain grid quadrature: sum_i Hw_i f_i ~ int_0^1 f dx.
    double quad(const Profile& f) const;
    /// Mean in the background measure: (1/V) int f d(mu0).
    double mean0(const Profile& f) const;

    // -- gauge ----------------------------------------------------------------
    /// Projects out the constant mode and the discrete endpoint kernel modes
    /// of L (the regular-representative gauge), orthogonally in d(mu0).
    void project_gauge(Profile& f) const;
    /// Number of gauge directions removed (constants + kernel modes).
    int gauge_dim() const { return static_cast<int>(gauge_basis_.size()); }
    const std::vector<Profile>& gauge_basis() const { return gauge_basis_; }

    /// rho for the round background (constant profile).
    Profile round_density() const { return Profile(N, rho0); }

private:
    friend Background build_background(const GeometryConfig&);
    std::vector<Profile> gauge_basis_; ///< d(mu0)-orthonormal
};

/// Validates the config and assembles the background: quadrature, operator,
/// gauge basis, h0 = 0, V. Throws ValidationError for n != 1 or a bad grid.
Background build_background(const GeometryConfig& config);

} // namespace srf
