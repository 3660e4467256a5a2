#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "tdab/dynamics.hpp"
#include "tdab/errors.hpp"

using namespace tdab;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// kappa = 1 in Consistent mode: e = 2 pi, m = 1, rho = 1 (R < 1).
ElectronParams unit_kappa_params() {
    ElectronParams p;
    p.charge = kTwoPi;
    p.mass = 1.0;
    p.orbit_radius = 1.0;
    p.omega0 = 1.0;
    p.coupling = CouplingMode::Consistent;
    return p;
}

TabulatedFlux make_tabulated(double t_max, int n = 400) {
    std::vector<double> t(n), phi(n);
    for (int i = 0; i < n; ++i) {
        t[i] = t_max * i / (n - 1);
        phi[i] = 1.0 + 0.2 * std::sin(1.3 * t[i]) + 0.05 * t[i];
    }
    return TabulatedFlux(std::move(t), std::move(phi));
}
}  // namespace

TEST_CASE("coupling_coefficient modes") {
    ElectronParams p = unit_kappa_params();
    CHECK(coupling_coefficient(p) == doctest::Approx(1.0).epsilon(1e-15));
    p.coupling = CouplingMode::PaperLiteral;
    CHECK(coupling_coefficient(p) == doctest::Approx(1.0).epsilon(1e-15));

    p.orbit_radius = 2.0;
    p.coupling = CouplingMode::Consistent;
    CHECK(coupling_coefficient(p) == doctest::Approx(0.25).epsilon(1e-15));
    p.coupling = CouplingMode::PaperLiteral;
    CHECK(coupling_coefficient(p) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("omega_closed_form") {
    const FluxProfile sinusoid = SinusoidFlux{1.0, 0.1, 1.0};

    SUBCASE("constant flux keeps omega0 on both branches") {
        const FluxProfile constant = ConstantFlux{3.0};
        CHECK(omega_closed_form(1.0, 1.0, constant, Branch::C1, 2.0) == 1.0);
        CHECK(omega_closed_form(1.0, 1.0, constant, Branch::C2, 2.0) == -1.0);
    }
    SUBCASE("sinusoid, kappa=1, omega0=1 at t=pi/2") {
        CHECK(omega_closed_form(1.0, 1.0, sinusoid, Branch::C1, kPi / 2.0) ==
              doctest::Approx(1.1).epsilon(1e-14));
        // The induced-field correction has the same sign on both branches:
        // the torque does not depend on the direction of travel.
        CHECK(omega_closed_form(1.0, 1.0, sinusoid, Branch::C2, kPi / 2.0) ==
              doctest::Approx(-0.9).epsilon(1e-14));
    }
}

TEST_CASE("branch corrections are identical: omega1 - omega0 == omega2 + omega0") {
    std::vector<FluxProfile> profiles;
    profiles.emplace_back(RampFlux{2.0, 0.6});
    profiles.emplace_back(SinusoidFlux{1.0, 0.4, 3.0});
    profiles.emplace_back(make_tabulated(5.0));
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> time_dist(0.0, 4.5);
    std::uniform_real_distribution<double> kappa_dist(0.1, 3.0);
    for (const auto& profile : profiles) {
        for (int k = 0; k < 25; ++k) {
            const double t = time_dist(rng);
            const double kappa = kappa_dist(rng);
            const double c1 =
                omega_closed_form(kappa, 1.5, profile, Branch::C1, t) - 1.5;
            const double c2 =
                omega_closed_form(kappa, 1.5, profile, Branch::C2, t) + 1.5;
            CHECK(c1 == doctest::Approx(c2).epsilon(1e-14));
        }
    }
}

TEST_CASE("torque_rhs") {
    CHECK(torque_rhs(1.0, ConstantFlux{5.0}, 2.0) == 0.0);
    CHECK(torque_rhs(1.0, RampFlux{0.0, 0.7}, 9.0) == doctest::Approx(0.7));
    CHECK(torque_rhs(1.0, SinusoidFlux{1.0, 0.1, 2.0}, 0.0) ==
          doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("integrate_trajectory: free circular motion under constant flux") {
    ElectronParams p = unit_kappa_params();
    SolenoidConfig cfg{0.5, ConstantFlux{1.0}};
    const Trajectory traj =
        integrate_trajectory(p, cfg, Branch::C1, kPi, kPi / 200.0);
    CHECK(traj.samples.back().t == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(traj.samples.back().phi == doctest::Approx(kPi).epsilon(1e-10));
    CHECK(traj.samples.back().omega == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("integrate_trajectory: ramp flux has the hand-integrated solution") {
    ElectronParams p = unit_kappa_params();
    const double rate = 0.8;
    SolenoidConfig cfg{0.5, RampFlux{1.0, rate}};
    const Trajectory traj =
        integrate_trajectory(p, cfg, Branch::C1, 2.0, 0.01);
    for (const auto& s : traj.samples) {
        CHECK(s.omega ==
              doctest::Approx(1.0 + rate * s.t).epsilon(1e-8));
        CHECK(s.phi ==
              doctest::Approx(s.t + rate * s.t * s.t / 2.0).epsilon(1e-8));
    }
}

TEST_CASE("integrate_trajectory matches the closed form on both branches") {
    ElectronParams p = unit_kappa_params();
    SolenoidConfig cfg{0.5, SinusoidFlux{1.0, 0.1, 4.0}};
    const double t_end = kPi;
    const double step = required_step_bound(cfg.profile, t_end);
    for (const Branch b : {Branch::C1, Branch::C2}) {
        const Trajectory traj = integrate_trajectory(p, cfg, b, t_end, step);
        for (const auto& s : traj.samples) {
            const double expected =
                omega_closed_form(p, cfg.profile, b, s.t);
            CHECK(s.omega == doctest::Approx(expected).epsilon(1e-8));
        }
    }
}

TEST_CASE("trajectory structural invariants") {
    ElectronParams p = unit_kappa_params();
    SolenoidConfig cfg{0.5, SinusoidFlux{1.0, 0.2, 2.0}};
    const double t_end = 1.7;
    const Trajectory traj =
        integrate_trajectory(p, cfg, Branch::C2, t_end, 0.013);
    REQUIRE(traj.samples.size() >= 3);
    CHECK(traj.samples.size() % 2 == 1);  // composite-Simpson ready
    CHECK(traj.samples.front().t == 0.0);
    CHECK(traj.samples.front().phi == 0.0);
    CHECK(traj.samples.front().omega == -p.omega0);
    CHECK(traj.samples.back().t == doctest::Approx(t_end).epsilon(1e-15));
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        const auto& a = traj.samples[i - 1];
        const auto& b = traj.samples[i];
        CHECK(b.t > a.t);
        // phi increments consistent with sampled omega to O(step^2)
        const double h = b.t - a.t;
        const double trapezoid = 0.5 * (a.omega + b.omega) * h;
        CHECK(std::abs(b.phi - a.phi - trapezoid) < 5.0 * h * h * h);
    }
}

TEST_CASE("integrate_trajectory rejects bad steps and spans") {
    ElectronParams p = unit_kappa_params();
    SolenoidConfig cfg{0.5, SinusoidFlux{1.0, 0.1, 10.0}};
    CHECK_THROWS_AS(integrate_trajectory(p, cfg, Branch::C1, -1.0, 0.001),
                    std::domain_error);
    // bound is min(0.05/10, t_end/100) = 0.005
    CHECK_THROWS_WITH_AS(
        integrate_trajectory(p, cfg, Branch::C1, 10.0, 0.1),
        doctest::Contains("0.005"), std::invalid_argument);
}

TEST_CASE("RK4 convergence: halving the step shrinks the error >= 12x") {
    ElectronParams p = unit_kappa_params();
    SolenoidConfig cfg{0.5, SinusoidFlux{1.0, 0.5, 4.0}};
    const double t_end = kPi;

    const auto max_err = [&](double step) {
        const Trajectory traj =
            integrate_trajectory(p, cfg, Branch::C1, t_end, step);
        double worst = 0.0;
        for (const auto& s : traj.samples) {
            worst = std::max(worst,
                             std::abs(s.omega - omega_closed_form(
                                                     p, cfg.profile,
                                                     Branch::C1, s.t)));
        }
        return worst;
    };

    const double h = required_step_bound(cfg.profile, t_end);
    const double coarse = max_err(h);
    const double fine = max_err(h / 2.0);
    CHECK(coarse > 1e-13);  // above roundoff so the ratio is meaningful
    CHECK(coarse / fine >= 12.0);
}

TEST_CASE("encounter_time is pi/omega0") {
    ElectronParams p = unit_kappa_params();
    CHECK(encounter_time(p) == doctest::Approx(kPi).epsilon(1e-15));
    p.omega0 = 2.0;
    CHECK(encounter_time(p) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    p.omega0 = kPi;
    CHECK(encounter_time(p) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("encounter_time_numeric agrees with pi/omega0 for every profile") {
    SUBCASE("constant flux") {
        ElectronParams p = unit_kappa_params();
        SolenoidConfig cfg{0.5, ConstantFlux{1.0}};
        CHECK(std::abs(encounter_time_numeric(p, cfg, 0.01) - kPi) < 1e-9);
    }
    SUBCASE("sinusoid flux") {
        ElectronParams p = unit_kappa_params();
        SolenoidConfig cfg{0.5, SinusoidFlux{1.0, 0.1, 1.0}};
        CHECK(std::abs(encounter_time_numeric(p, cfg, 0.01) - kPi) < 1e-8);
    }
    SUBCASE("ramp flux, omega0 = 2") {
        ElectronParams p = unit_kappa_params();
        p.omega0 = 2.0;
        SolenoidConfig cfg{0.5, RampFlux{1.0, 0.5}};
        CHECK(std::abs(encounter_time_numeric(p, cfg, 0.005) - kPi / 2.0) <
              1e-8);
    }
    SUBCASE("tabulated flux") {
        ElectronParams p = unit_kappa_params();
        SolenoidConfig cfg{0.5, make_tabulated(4.0)};
        CHECK(std::abs(encounter_time_numeric(p, cfg, 0.01) - kPi) < 1e-8);
    }
}

TEST_CASE("encounter_angle") {
    SUBCASE("constant flux gives pi") {
        CHECK(encounter_angle(1.0, 1.0, ConstantFlux{4.0}) ==
              doctest::Approx(kPi).epsilon(1e-15));
    }
    SUBCASE("full-period sinusoid cancels: Omega T = 2 pi") {
        // omega0 = 1 -> T = pi, so Omega = 2 gives Omega T = 2 pi
        CHECK(encounter_angle(1.0, 1.0, SinusoidFlux{1.0, 0.1, 2.0}) ==
              doctest::Approx(kPi).epsilon(1e-12));
    }
    SUBCASE("literal coupling mode, sinusoid with Omega T = pi") {
        ElectronParams p = unit_kappa_params();
        p.coupling = CouplingMode::PaperLiteral;  // kappa = 1 at rho = 1
        const FluxProfile profile = SinusoidFlux{1.0, 0.1, 1.0};
        CHECK(encounter_angle(p, profile) ==
              doctest::Approx(kPi + 0.2).epsilon(1e-12));
    }
    SUBCASE("ramp closed form matches quadrature") {
        const FluxProfile profile = RampFlux{1.0, 0.7};
        CHECK(encounter_angle(0.8, 1.3, profile) ==
              doctest::Approx(encounter_angle_quadrature(0.8, 1.3, profile))
                  .epsilon(1e-10));
    }
    SUBCASE("tabulated profile goes through quadrature") {
        const FluxProfile profile = make_tabulated(4.0);
        CHECK(encounter_angle(1.0, 1.0, profile) ==
              doctest::Approx(encounter_angle_quadrature(1.0, 1.0, profile))
                  .epsilon(1e-12));
    }
}

TEST_CASE("torque law: finite-difference d(m rho^2 omega)/dt vs (e/2pi) dPhi/dt") {
    ElectronParams p;
    p.charge = 1.4;
    p.mass = 0.9;
    p.orbit_radius = 2.0;
    p.omega0 = 1.0;
    p.coupling = CouplingMode::Consistent;
    SolenoidConfig cfg{1.0, SinusoidFlux{1.0, 0.3, 2.0}};
    const Trajectory traj =
        integrate_trajectory(p, cfg, Branch::C1, kPi, 0.0005);
    const double inertia = p.mass * p.orbit_radius * p.orbit_radius;
    for (std::size_t i = 1; i + 1 < traj.samples.size(); i += 101) {
        const auto& a = traj.samples[i - 1];
        const auto& b = traj.samples[i + 1];
        const double dl_dt = inertia * (b.omega - a.omega) / (b.t - a.t);
        const double expected =
            p.charge / kTwoPi *
            flux_derivative(cfg.profile, traj.samples[i].t);
        // skip near-zeros of Phidot where the FD stencil's own truncation
        // error dominates the relative comparison
        if (std::abs(expected) > 0.05) {
            CHECK(dl_dt == doctest::Approx(expected).epsilon(1e-6));
        }
    }
}
