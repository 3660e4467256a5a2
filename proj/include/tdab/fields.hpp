#pragma once

#include <variant>
#include <vector>

namespace tdab {

// Flux profiles Phi(t). All quantities are dimensionless numbers in a
// consistent unit system with hbar = 1.

struct ConstantFlux {
    double phi0 = 0.0;
};

struct RampFlux {
    double phi0 = 0.0;
    double rate = 0.0;  // dPhi/dt
};

/// Phi(t) = phi0 + phi1 * sin(omega * t)
struct SinusoidFlux {
    double phi0 = 0.0;
    double phi1 = 0.0;
    double omega = 0.0;
};

/// Natural cubic spline through ordered (t, phi) samples. C2 interpolant,
/// so the derivative feeding the dynamics ODE is continuous.
class TabulatedFlux {
  public:
    /// Requires at least 4 samples with strictly increasing times.
    TabulatedFlux(std::vector<double> times, std::vector<double> fluxes);

    double value(double t) const;
    double derivative(double t) const;

    double t_min() const { return times_.front(); }
    double t_max() const { return times_.back(); }

  private:
    std::size_t segment(double t) const;  // throws std::out_of_range

    std::vector<double> times_;
    std::vector<double> fluxes_;
    std::vector<double> second_;  // spline second derivatives at the knots
};

using FluxProfile =
    std::variant<ConstantFlux, RampFlux, SinusoidFlux, TabulatedFlux>;

double flux_value(const FluxProfile& profile, double t);
double flux_derivative(const FluxProfile& profile, double t);

/// Infinite solenoid along z with radius `radius` carrying total flux
/// Phi(t) given by `profile`.
struct SolenoidConfig {
    double radius = 1.0;  // > 0
    FluxProfile profile = ConstantFlux{};
};

/// Cylindrical point; phi is stored unnormalized (winding-aware).
struct CylPoint {
    double rho = 0.0;  // >= 0
    double phi = 0.0;
    double z = 0.0;
};

/// Nonzero field components of the solenoid configuration; everything else
/// vanishes by symmetry.
struct FieldSample {
    double b_z = 0.0;    // axial magnetic field
    double a_phi = 0.0;  // azimuthal vector potential
    double e_phi = 0.0;  // azimuthal induced electric field, -dA/dt
};

/// Evaluates B_z, A_phi and E_phi at (p, t). Inside (rho < R):
/// B_z = Phi/(pi R^2), A_phi = rho Phi/(2 pi R^2), E_phi = -rho Phidot/(2 pi R^2).
/// Outside (rho >= R, including rho == R): B_z = 0, A_phi = Phi/(2 pi rho),
/// E_phi = -Phidot/(2 pi rho). The two branches agree at rho == R.
FieldSample field_at(const SolenoidConfig& cfg, const CylPoint& p, double t);

}  // namespace tdab
