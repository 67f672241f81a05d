#pragma once

#include "srf/background.hpp"
#include "srf/geometry.hpp"

#include <cstdint>
#include <optional>

namespace srf {

/// Time integration parameters. dt <= 0 selects the automatic step: the
/// largest round value below half the measured RK4 stability limit of the
/// background. The bound is re-checked against the evolving metric each step.
struct FlowConfig {
    double dt = 0.0;        ///< <= 0 => auto
    double t_max = 10.0;
    int sample_every = 0;   ///< <= 0 => auto (targets spacing 0.01)
    double safety = 0.9;    ///< fraction of the stability limit tolerated
    Normalization normalization = Normalization::Unit;
};

/// One sampled state of the gauge-projected flow. psi is the mean-zero
/// (in d(mu0)) regular representative; the constant mode is reconstructed
/// separately (GaugeTrack). phidot_gauge is the cached profile
/// log(W/W0) - h0 + kappa*psi, i.e. phi-dot without the constant-mode term
/// kappa*alpha.
struct FlowState {
    double t = 0.0;
    Profile psi;
    Profile ratio;         ///< metric density W/(x(1-x))
    Profile h;             ///< transverse Ricci potential of the state
    Profile phidot_gauge;
    double m = 0.0;        ///< gauge source: background mean of log(W/W0) - h0
};

/// Dense per-step scalars collected along the run.
struct StepRecord {
    double t = 0.0;
    double m = 0.0;        ///< gauge source series m(t)
    double grad_sq = 0.0;  ///< (1/V) int |grad phi-dot|^2 d(mu_phi)
};

/// A completed integration: sampled states plus the dense m / grad series.
struct Trajectory {
    GeometryConfig geometry;
    FlowConfig flow;
    std::uint64_t seed = 0;      ///< provenance echo (0 when not sampled)
    std::vector<FlowState> states;
    std::vector<StepRecord> series;
    double dt = 0.0;             ///< resolved step
    int sample_every = 0;        ///< resolved sampling stride
};

/// Constant-mode track: alpha solves alpha' = kappa*alpha + m(t) exactly for
/// the nonlinearity of the reduced flow. alpha_bounded is the unique bounded
/// branch; alpha = alpha_bounded + (alpha0 - c0)*e^{kappa t}.
struct GaugeTrack {
    double alpha0 = 0.0;
    double c0 = 0.0;                  ///< shooting value of the bounded branch
    std::vector<double> t;            ///< state times
    std::vector<double> alpha;        ///< alpha at state times
    std::vector<double> a_t;          ///< a(t) from the h-evolution (mu_phi mean)
};

/// Automatic stable step for the round background of `bg`.
double auto_dt(const Background& bg, double safety = 0.5);

/// Current stability limit for an evolving density.
double stability_limit(const Background& bg, const Profile& ratio);

/// One classical RK4 step of the projected equation
/// psi' = P[log(W/W0) - h0] + kappa*psi. Throws PositivityViolation or
/// StabilityViolation. Returns the advanced state (h recomputed).
FlowState step(const Background& bg, const FlowState& state, double dt,
               double safety = 0.9);

/// Integrates from phi0 (constant part discarded into the gauge; the flow is
/// exactly block-triangular) to t_max, sampling every `sample_every` steps.
Trajectory run(const Background& bg, const FlowConfig& cfg, const Profile& phi0,
               std::uint64_t seed = 0);

/// Shooting value of the bounded constant-mode branch:
/// c0 = -int_0^inf e^{-kappa tau} m(tau) dtau, truncated at t_max with an
/// analytic tail correction. `bound` is the reported truncation bound.
struct ShootResult {
    double c0 = 0.0;
    double bound = 0.0;
};
ShootResult c0_shoot(const Background& bg, const Trajectory& traj);

/// The initial-constant formula evaluated verbatim:
/// int_0^inf e^{-t} ||grad phi-dot||^2 dt + (1/V) int h(0) d(mu0).
/// The weight is e^{-t} regardless of mode; in unit normalization this
/// coincides with e^{-kappa t} (see README).
struct C0Paper {
    double value = 0.0;
    double bound = 0.0;
};
C0Paper c0_paper(const Background& bg, const Trajectory& traj);

/// Reconstructs alpha(t) at the state times for the given alpha0, by the
/// backward exponential-integrator recursion (exact for piecewise-linear m).
GaugeTrack alpha_solve(const Background& bg, const Trajectory& traj, double alpha0);

/// Maps states or whole trajectories between the two normalizations by the
/// exact scaling (density x kappa, potential x kappa, time x kappa).
Trajectory rescale_normalization(const Background& from, const Background& to,
                                 const Trajectory& traj);
Profile rescale_potential(const Background& from, const Background& to,
                          const Profile& phi);

/// Consistency residuals of the flow identities, measured along the
/// trajectory with the bounded gauge:
///  (a) sup |phi-dot - h - c(t)|, c(t) the d(mu_phi)-weighted best constant;
///  (b) sup |phi-ddot - Delta phi-dot - kappa phi-dot| (time FD, 4th order);
///  (c) sup |h-dot - Delta h - kappa h - a(t)| and the literal variant with
///      coefficient 1 on h;
///  (d) sup |d/dt rho - L phi-dot| (measure evolution).
struct ConsistencyResiduals {
    double phidot_vs_h = 0;
    double second_order = 0;
    double h_evolution_kappa = 0;
    double h_evolution_one = 0;
    double measure_evolution = 0;
};
ConsistencyResiduals consistency_residuals(const Background& bg, const Trajectory& traj);

} // namespace srf
