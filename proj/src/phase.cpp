#include "tdab/phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tdab/quadrature.hpp"

namespace tdab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

std::string phase_route_name(PhaseRoute route) {
    switch (route) {
        case PhaseRoute::MeanFluxClosedForm: return "mean";
        case PhaseRoute::ClosedFormTrajectories: return "closed";
        case PhaseRoute::NumericTrajectories: return "numeric";
    }
    return "unknown";
}

double mean_flux(const FluxProfile& profile, double t_f, double quad_rel_tol) {
    if (!(t_f > 0.0)) throw std::domain_error("mean_flux: T must be > 0");
    return std::visit(
        [&](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, ConstantFlux>) {
                return p.phi0;
            } else if constexpr (std::is_same_v<P, RampFlux>) {
                return p.phi0 + p.rate * t_f / 2.0;
            } else if constexpr (std::is_same_v<P, SinusoidFlux>) {
                if (p.omega == 0.0) return p.phi0;
                const double x = p.omega * t_f;
                return p.phi0 + p.phi1 * (1.0 - std::cos(x)) / x;
            } else {
                return adaptive_simpson(
                           [&](double t) { return flux_value(profile, t); },
                           0.0, t_f, quad_rel_tol) /
                       t_f;
            }
        },
        profile);
}

PhaseResult ab_phase_mean_flux(const FluxProfile& profile,
                               const ElectronParams& params,
                               double quad_rel_tol) {
    PhaseResult result;
    result.route = PhaseRoute::MeanFluxClosedForm;
    result.encounter_time = encounter_time(params);
    result.phi_ab =
        params.charge * mean_flux(profile, result.encounter_time, quad_rel_tol);
    result.phi_f = encounter_angle(params, profile, quad_rel_tol);
    return result;
}

double line_integral_A(const FluxProfile& profile, const Trajectory& traj) {
    const std::size_t n = traj.samples.size();
    if (n < 3)
        throw std::domain_error("line_integral_A: need at least 3 samples");
    std::vector<double> t(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = traj.samples[i].t;
        y[i] = flux_value(profile, t[i]) * traj.samples[i].omega / kTwoPi;
    }
    return simpson_samples(t, y);
}

PhaseResult ab_phase_trajectories(const FluxProfile& profile,
                                  const ElectronParams& params,
                                  const SolenoidConfig& cfg, PhaseRoute route,
                                  double step,
                                  std::optional<double> kappa_override) {
    if (route == PhaseRoute::MeanFluxClosedForm)
        return ab_phase_mean_flux(profile, params);

    const double t_f = encounter_time(params);
    if (step <= 0.0) step = required_step_bound(profile, t_f);

    const auto build = [&](Branch b) {
        return route == PhaseRoute::NumericTrajectories
                   ? integrate_trajectory(params, cfg, b, t_f, step,
                                          kappa_override)
                   : sample_closed_form(params, cfg, b, t_f, step,
                                        kappa_override);
    };
    const Trajectory c1 = build(Branch::C1);
    const Trajectory c2 = build(Branch::C2);

    PhaseResult result;
    result.route = route;
    result.encounter_time = t_f;
    result.phi_ab =
        params.charge * (line_integral_A(profile, c1) -
                         line_integral_A(profile, c2));
    // The branches meet at phi1(T); phi2(T) + 2 pi lands on the same angle.
    result.phi_f = c1.samples.back().phi;
    return result;
}

double f_factor(double ratio, double x) {
    if (!(x > 0.0)) throw std::domain_error("f_factor: x must be > 0");
    // 1 - cos x evaluated as 2 sin^2(x/2): no cancellation at small x.
    const double s = std::sin(0.5 * x);
    return 1.0 + ratio * 2.0 * s * s / x;
}

double f_factor_printed_sign(double ratio, double x) {
    if (!(x > 0.0))
        throw std::domain_error("f_factor_printed_sign: x must be > 0");
    const double s = std::sin(0.5 * x);
    return 1.0 - ratio * 2.0 * s * s / x;
}

std::pair<double, double> f_limits(double ratio) {
    const double a = std::abs(ratio);
    for (const double x : {1e-8, 1e-6, 1e-4, 1e-2, 0.1}) {
        if (std::abs(f_factor(ratio, x) - 1.0) > a * x / 2.0 + 1e-12)
            throw std::logic_error("f_limits: Taylor bound violated");
    }
    for (const double x : {1e2, 1e4, 1e6}) {
        if (std::abs(f_factor(ratio, x) - 1.0) > 2.0 * a / x + 1e-15)
            throw std::logic_error("f_limits: envelope bound violated");
    }
    return {1.0, 1.0};
}

double encounter_angle_sinusoid(const ElectronParams& params, double phi1,
                                double omega) {
    const double kappa = coupling_coefficient(params);
    const double t_f = encounter_time(params);
    if (omega == 0.0) return kPi;
    return kPi + kappa * phi1 * (1.0 - std::cos(omega * t_f)) / omega;
}

}  // namespace tdab
