#include "tdab/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tdab/errors.hpp"
#include "tdab/quadrature.hpp"

namespace tdab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate(const ElectronParams& p) {
    if (!(p.mass > 0.0)) throw std::domain_error("electron mass must be > 0");
    if (!(p.charge > 0.0))
        throw std::domain_error("electron charge magnitude must be > 0");
    if (!(p.omega0 > 0.0)) throw std::domain_error("omega0 must be > 0");
    if (!(p.orbit_radius > 0.0))
        throw std::domain_error("orbit radius must be > 0");
}

void validate_against(const ElectronParams& p, const SolenoidConfig& cfg) {
    validate(p);
    if (!(p.orbit_radius > cfg.radius))
        throw std::domain_error(
            "electron orbit radius must exceed the solenoid radius");
}

/// Sample times 0 = t_0 < ... < t_n = t_end with uniform spacing `step`
/// except for a shortened final step; the count is forced odd (even
/// interval count) by splitting the last interval when necessary.
std::vector<double> build_grid(double t_end, double step) {
    std::size_t n = static_cast<std::size_t>(std::ceil(t_end / step - 1e-9));
    if (n < 2) n = 2;
    std::vector<double> times(n + 1);
    for (std::size_t k = 0; k < n; ++k) times[k] = static_cast<double>(k) * step;
    times[n] = t_end;
    // Merge a vanishingly small final step into its predecessor.
    if (times[n] - times[n - 1] < 1e-9 * step) {
        if (n >= 3) {
            times.erase(times.begin() + static_cast<std::ptrdiff_t>(n) - 1);
            n -= 1;
        } else {
            times[n - 1] = 0.5 * times[n];
        }
    }
    if (n % 2 != 0) {
        const double mid = 0.5 * (times[n - 1] + times[n]);
        times.insert(times.end() - 1, mid);
    }
    return times;
}

}  // namespace

double coupling_coefficient(const ElectronParams& params) {
    validate(params);
    const double rho = params.orbit_radius;
    const double denom = params.coupling == CouplingMode::Consistent
                             ? kTwoPi * params.mass * rho * rho
                             : kTwoPi * params.mass * rho;
    return params.charge / denom;
}

double omega_closed_form(double kappa, double omega0,
                         const FluxProfile& profile, Branch branch, double t) {
    const double dphi = flux_value(profile, t) - flux_value(profile, 0.0);
    return branch_sign(branch) * omega0 + kappa * dphi;
}

double omega_closed_form(const ElectronParams& params,
                         const FluxProfile& profile, Branch branch, double t) {
    return omega_closed_form(coupling_coefficient(params), params.omega0,
                             profile, branch, t);
}

double torque_rhs(double kappa, const FluxProfile& profile, double t) {
    return kappa * flux_derivative(profile, t);
}

double torque_rhs(const ElectronParams& params, const FluxProfile& profile,
                  double t) {
    return torque_rhs(coupling_coefficient(params), profile, t);
}

double required_step_bound(const FluxProfile& profile, double t_end) {
    if (const auto* sine = std::get_if<SinusoidFlux>(&profile);
        sine != nullptr && sine->omega > 0.0) {
        return std::min(0.05 / sine->omega, t_end / 100.0);
    }
    return t_end;
}

Trajectory integrate_trajectory(const ElectronParams& params,
                                const SolenoidConfig& cfg, Branch branch,
                                double t_end, double step,
                                std::optional<double> kappa_override) {
    validate_against(params, cfg);
    if (!(t_end > 0.0))
        throw std::domain_error("integrate_trajectory: t_end must be > 0");
    const double bound = required_step_bound(cfg.profile, t_end);
    if (!(step > 0.0) || step > bound * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "integrate_trajectory: step " << step
           << " too coarse for the flux profile; require 0 < step <= "
           << bound;
        throw std::invalid_argument(os.str());
    }

    const double kappa = kappa_override.value_or(coupling_coefficient(params));
    const auto& profile = cfg.profile;
    const std::vector<double> times = build_grid(t_end, step);

    Trajectory traj;
    traj.branch = branch;
    traj.step = step;
    traj.method = IntegrationMethod::Rk4;
    traj.samples.reserve(times.size());

    double phi = 0.0;
    double omega = branch_sign(branch) * params.omega0;
    traj.samples.push_back({0.0, phi, omega});
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        const double t = times[k];
        const double h = times[k + 1] - t;
        // state y = (phi, omega); rhs = (omega, kappa * Phidot(t))
        const double a1 = torque_rhs(kappa, profile, t);
        const double a2 = torque_rhs(kappa, profile, t + 0.5 * h);
        const double a4 = torque_rhs(kappa, profile, t + h);
        const double k1p = omega;
        const double k2p = omega + 0.5 * h * a1;
        const double k3p = omega + 0.5 * h * a2;
        const double k4p = omega + h * a2;
        phi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        omega += h / 6.0 * (a1 + 4.0 * a2 + a4);
        traj.samples.push_back({times[k + 1], phi, omega});
    }
    return traj;
}

Trajectory sample_closed_form(const ElectronParams& params,
                              const SolenoidConfig& cfg, Branch branch,
                              double t_end, double step,
                              std::optional<double> kappa_override) {
    validate_against(params, cfg);
    if (!(t_end > 0.0))
        throw std::domain_error("sample_closed_form: t_end must be > 0");
    if (!(step > 0.0))
        throw std::invalid_argument("sample_closed_form: step must be > 0");

    const double kappa = kappa_override.value_or(coupling_coefficient(params));
    const auto& profile = cfg.profile;
    const std::vector<double> times = build_grid(t_end, step);

    Trajectory traj;
    traj.branch = branch;
    traj.step = step;
    traj.method = IntegrationMethod::ClosedForm;
    traj.samples.reserve(times.size());

    const auto omega_at = [&](double t) {
        return omega_closed_form(kappa, params.omega0, profile, branch, t);
    };
    double phi = 0.0;
    traj.samples.push_back({0.0, phi, omega_at(0.0)});
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        const double t0 = times[k];
        const double t1 = times[k + 1];
        const double h = t1 - t0;
        phi += h / 6.0 *
               (omega_at(t0) + 4.0 * omega_at(t0 + 0.5 * h) + omega_at(t1));
        traj.samples.push_back({t1, phi, omega_at(t1)});
    }
    return traj;
}

double encounter_time(const ElectronParams& params) {
    validate(params);
    return kPi / params.omega0;
}

double encounter_time_numeric(const ElectronParams& params,
                              const SolenoidConfig& cfg, double step) {
    validate_against(params, cfg);
    const double t0 = kPi / params.omega0;

    const auto g = [&](double t_candidate) {
        const double s =
            std::min(step, required_step_bound(cfg.profile, t_candidate));
        const Trajectory c1 = integrate_trajectory(params, cfg, Branch::C1,
                                                   t_candidate, s);
        const Trajectory c2 = integrate_trajectory(params, cfg, Branch::C2,
                                                   t_candidate, s);
        return (c1.samples.back().phi - c2.samples.back().phi) - kTwoPi;
    };

    double lo = 0.9 * t0;
    double hi = 1.1 * t0;
    double glo = g(lo);
    double ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if (glo * ghi > 0.0) {
        throw SolverError(
            "encounter_time_numeric: root not bracketed in pi/omega0 +- 10%; "
            "the branch separation should always cross 2*pi there");
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-12 * t0; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if (glo * gm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    return 0.5 * (lo + hi);
}

double encounter_angle(double kappa, double omega0, const FluxProfile& profile,
                       double quad_rel_tol) {
    if (!(omega0 > 0.0)) throw std::domain_error("omega0 must be > 0");
    const double t_f = kPi / omega0;
    return std::visit(
        [&](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, ConstantFlux>) {
                return kPi;
            } else if constexpr (std::is_same_v<P, RampFlux>) {
                return kPi + kappa * p.rate * t_f * t_f / 2.0;
            } else if constexpr (std::is_same_v<P, SinusoidFlux>) {
                if (p.omega == 0.0) return kPi;
                return kPi +
                       kappa * p.phi1 * (1.0 - std::cos(p.omega * t_f)) /
                           p.omega;
            } else {
                return encounter_angle_quadrature(kappa, omega0, profile,
                                                  quad_rel_tol);
            }
        },
        profile);
}

double encounter_angle(const ElectronParams& params, const FluxProfile& profile,
                       double quad_rel_tol) {
    return encounter_angle(coupling_coefficient(params), params.omega0, profile,
                           quad_rel_tol);
}

double encounter_angle_quadrature(double kappa, double omega0,
                                  const FluxProfile& profile,
                                  double quad_rel_tol) {
    if (!(omega0 > 0.0)) throw std::domain_error("omega0 must be > 0");
    const double t_f = kPi / omega0;
    const double phi_at_0 = flux_value(profile, 0.0);
    const double integral = adaptive_simpson(
        [&](double t) { return flux_value(profile, t) - phi_at_0; }, 0.0, t_f,
        quad_rel_tol);
    return kPi + kappa * integral;
}

}  // namespace tdab
