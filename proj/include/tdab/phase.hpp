#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tdab/dynamics.hpp"
#include "tdab/fields.hpp"

namespace tdab {

enum class PhaseRoute {
    MeanFluxClosedForm,
    ClosedFormTrajectories,
    NumericTrajectories,
};

std::string phase_route_name(PhaseRoute route);

struct PhaseResult {
    double encounter_time = 0.0;  // T
    double phi_ab = 0.0;          // AB phase, hbar = 1
    double phi_f = 0.0;           // encounter angle
    PhaseRoute route = PhaseRoute::MeanFluxClosedForm;
};

/// Mean flux over [0, T]: (1/T) Int_0^T Phi(t) dt. Closed forms for
/// constant/ramp/sinusoid; adaptive Simpson for tabulated profiles.
double mean_flux(const FluxProfile& profile, double t_f,
                 double quad_rel_tol = 1e-10);

/// phi_AB = e * mean_flux(profile, T) with T = pi/omega0.
PhaseResult ab_phase_mean_flux(const FluxProfile& profile,
                               const ElectronParams& params,
                               double quad_rel_tol = 1e-10);

/// Line integral of A along one branch trajectory:
/// (1/2 pi) Int Phi(t) omega(t) dt via composite Simpson over the samples.
/// Requires an odd sample count of at least 3.
double line_integral_A(const FluxProfile& profile, const Trajectory& traj);

/// phi_AB = e * [line_integral_A(C1) - line_integral_A(C2)], trajectories
/// built by RK4 (NumericTrajectories) or closed-form sampling
/// (ClosedFormTrajectories). step <= 0 selects the profile's enforced step
/// bound. `kappa_override` scales the induced-field coupling without
/// touching e; phi_AB is invariant under it, phi_f is not.
PhaseResult ab_phase_trajectories(const FluxProfile& profile,
                                  const ElectronParams& params,
                                  const SolenoidConfig& cfg, PhaseRoute route,
                                  double step = 0.0,
                                  std::optional<double> kappa_override = {});

/// f(x) = 1 + ratio * (1 - cos x)/x for x > 0; equals mean_flux/phi0 for
/// the offset sinusoid with ratio = phi1/phi0 and x = Omega T.
double f_factor(double ratio, double x);

/// Variant with the opposite sign of the oscillating term,
/// 1 + ratio * (cos x - 1)/x, emitted alongside f_factor so both curve
/// conventions can be compared against external figures.
double f_factor_printed_sign(double ratio, double x);

/// Limits of f as x -> 0 and x -> infinity: both are 1. Also verifies the
/// Taylor bound |f-1| <= ratio*x/2 + 1e-12 at small x and the envelope
/// bound |f-1| <= 2*ratio/x at large x on sample grids; a violation throws
/// std::logic_error (it would mean the formula is wrong).
std::pair<double, double> f_limits(double ratio);

/// Encounter angle for the offset sinusoid:
/// phi_f = pi + kappa * phi1 * (1 - cos(Omega T))/Omega with T = pi/omega0.
double encounter_angle_sinusoid(const ElectronParams& params, double phi1,
                                double omega);

struct SinusoidSummary {
    double ratio = 0.0;    // phi1/phi0
    double f = 1.0;        // mean_flux/phi0
    double omega_t = 0.0;  // Omega * T
};

}  // namespace tdab
