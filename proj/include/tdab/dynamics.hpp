#pragma once

#include <optional>
#include <vector>

#include "tdab/fields.hpp"

namespace tdab {

/// Selects the coupling coefficient kappa in the angular equation of
/// motion d(omega)/dt = kappa * dPhi/dt:
///   Consistent   : kappa = e / (2 pi m rho^2)   (dimensionally consistent,
///                  default)
///   PaperLiteral : kappa = e / (2 pi m rho)
/// The AB phase is independent of kappa; only the encounter angle differs.
enum class CouplingMode { Consistent, PaperLiteral };

struct ElectronParams {
    double mass = 1.0;          // m > 0
    double charge = 1.0;        // e > 0; physical charge is -e
    double orbit_radius = 2.0;  // rho, must exceed solenoid radius
    double omega0 = 1.0;        // initial angular speed > 0
    CouplingMode coupling = CouplingMode::Consistent;
};

enum class Branch { C1, C2 };

/// +1 on C1, -1 on C2 (sign of the initial angular velocity).
inline double branch_sign(Branch b) { return b == Branch::C1 ? 1.0 : -1.0; }

double coupling_coefficient(const ElectronParams& params);

/// omega_sigma(t) = sigma * omega0 + kappa * [Phi(t) - Phi(0)].
/// The induced-field correction is branch-independent: the torque on the
/// electron does not depend on its direction of travel.
double omega_closed_form(double kappa, double omega0, const FluxProfile& profile,
                         Branch branch, double t);
double omega_closed_form(const ElectronParams& params,
                         const FluxProfile& profile, Branch branch, double t);

/// d(omega)/dt = kappa * dPhi/dt, branch-independent.
double torque_rhs(double kappa, const FluxProfile& profile, double t);
double torque_rhs(const ElectronParams& params, const FluxProfile& profile,
                  double t);

struct TrajectorySample {
    double t = 0.0;
    double phi = 0.0;
    double omega = 0.0;
};

enum class IntegrationMethod { Rk4, ClosedForm };

/// Time-ordered (t, phi, omega) samples for one branch, starting at
/// (0, 0, sigma*omega0). The sample count is always odd so composite
/// Simpson can consume the samples directly.
struct Trajectory {
    Branch branch = Branch::C1;
    std::vector<TrajectorySample> samples;
    double step = 0.0;
    IntegrationMethod method = IntegrationMethod::Rk4;
};

/// Largest admissible RK4 step for `profile` on [0, t_end]: for sinusoids
/// min(0.05/omega, t_end/100), otherwise t_end.
double required_step_bound(const FluxProfile& profile, double t_end);

/// Fixed-step classical RK4 of (phi, omega) from (0, sigma*omega0); the
/// final sample lands exactly on t_end (last step shortened if needed).
/// Throws std::domain_error for t_end <= 0 and std::invalid_argument if
/// the step violates required_step_bound. `kappa_override`, when set,
/// replaces coupling_coefficient(params).
Trajectory integrate_trajectory(const ElectronParams& params,
                                const SolenoidConfig& cfg, Branch branch,
                                double t_end, double step,
                                std::optional<double> kappa_override = {});

/// Same grid as integrate_trajectory but omega taken from the closed form;
/// phi accumulated by per-step Simpson of the closed-form omega.
Trajectory sample_closed_form(const ElectronParams& params,
                              const SolenoidConfig& cfg, Branch branch,
                              double t_end, double step,
                              std::optional<double> kappa_override = {});

enum class EncounterMethod { ClosedForm, NumericRoot };

struct EncounterResult {
    double time = 0.0;   // T > 0
    double angle = 0.0;  // phi_f
    EncounterMethod method = EncounterMethod::ClosedForm;
};

/// T = pi/omega0, exactly; flux-independent because the induced-field
/// corrections are identical on both branches and cancel in phi1 - phi2.
double encounter_time(const ElectronParams& params);

/// Root of g(T) = [phi1(T) - phi2(T)] - 2 pi by bisection on jointly
/// integrated trajectories; bracket is pi/omega0 +- 10%. Throws SolverError
/// if the bracket does not straddle the root (signals a dynamics bug).
double encounter_time_numeric(const ElectronParams& params,
                              const SolenoidConfig& cfg, double step);

/// phi_f = pi + kappa * Int_0^T [Phi(t) - Phi(0)] dt with T = pi/omega0.
/// Closed forms for constant/ramp/sinusoid profiles; adaptive Simpson for
/// tabulated ones.
double encounter_angle(double kappa, double omega0, const FluxProfile& profile,
                       double quad_rel_tol = 1e-10);
double encounter_angle(const ElectronParams& params, const FluxProfile& profile,
                       double quad_rel_tol = 1e-10);

/// Quadrature evaluation of the same integral, usable as an independent
/// cross-check of the closed forms.
double encounter_angle_quadrature(double kappa, double omega0,
                                  const FluxProfile& profile,
                                  double quad_rel_tol = 1e-10);

}  // namespace tdab
