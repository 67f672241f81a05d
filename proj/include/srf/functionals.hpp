#pragma once

#include "srf/background.hpp"

namespace srf {

struct Trajectory;
struct GaugeTrack;

/// Path used for the path-integral functionals (J, K). The linear path is
/// phi_t = t*phi; the quadratic reparametrization phi_t = t^2*phi exercises
/// path independence.
struct PathSpec {
    enum class Kind { Linear, Quadratic };
    Kind kind = Kind::Linear;
    int nodes = 33; ///< Gauss-Legendre nodes in the path parameter (>= 9)
};

/// Values of the energy functionals for one potential. F_b carries the
/// exponent h0 - kappa*phi, F_a the exponent h0 - phi; they coincide in unit
/// normalization.
struct FunctionalReport {
    double I = 0, J = 0, F0 = 0, F_a = 0, F_b = 0, K = 0;
    double osc = 0, sup_phi = 0;
    double mean_phi_mu0 = 0, mean_phi_muphi = 0;
    double norm_C0 = 0, norm_C1 = 0, norm_C2 = 0;
};

/// Evaluates I, J, F0, F_a, F_b, K and the norm block for an admissible
/// potential. J and K use Gauss-Legendre quadrature along the path; every
/// path point is admissibility-checked (PositivityViolation otherwise).
FunctionalReport evaluate(const Background& bg, const Profile& phi,
                          const PathSpec& path = {});

/// |J_linear - J_quadratic| + |K_linear - K_quadratic| at equal node count.
double path_independence(const Background& bg, const Profile& phi, int nodes = 33);

/// Closed-form route to K at n = 1 (metric entropy + kappa*J); used as the
/// independent oracle against the path quadrature.
double k_energy_closed_form(const Background& bg, const Profile& phi);

/// Along-flow variation residuals: max over interior samples of
/// |d/dt F - formula|, with d/dt by 4th-order centered differences of the
/// sampled series and the formula evaluated from the state. The two printed
/// coefficients of the I-variation (1 and 1/2 on the measure term) are both
/// reported; `coeff_one_matches` records which one the flow data satisfies.
struct DerivativeCheck {
    double dJ_resid = 0;
    double dIJ_resid = 0;
    double dK_resid = 0;
    double dI_resid_coeff_one = 0;
    double dI_resid_coeff_half = 0;
    bool coeff_one_matches = false;
    double max_dK_formula = 0; ///< max over samples of the dK formula (sign check)
};
DerivativeCheck derivative_check(const Background& bg, const Trajectory& traj,
                                 const GaugeTrack& gauge);

} // namespace srf
