#include "tdab/fields.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tdab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TabulatedFlux::TabulatedFlux(std::vector<double> times,
                             std::vector<double> fluxes)
    : times_(std::move(times)), fluxes_(std::move(fluxes)) {
    const std::size_t n = times_.size();
    if (n < 4)
        throw std::invalid_argument("tabulated flux: need at least 4 samples");
    if (fluxes_.size() != n)
        throw std::invalid_argument(
            "tabulated flux: time/flux sample count mismatch");
    for (std::size_t i = 1; i < n; ++i) {
        if (!(times_[i] > times_[i - 1]))
            throw std::invalid_argument(
                "tabulated flux: sample times must be strictly increasing");
    }

    // Natural cubic spline: tridiagonal solve for the knot second
    // derivatives (Thomas algorithm).
    second_.assign(n, 0.0);
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
    diag[0] = 1.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = times_[i] - times_[i - 1];
        const double h1 = times_[i + 1] - times_[i];
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((fluxes_[i + 1] - fluxes_[i]) / h1 -
                        (fluxes_[i] - fluxes_[i - 1]) / h0);
    }
    diag[n - 1] = 1.0;
    // forward sweep; lower diagonal at row i is h0 = t_i - t_{i-1}
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double h0 = times_[i] - times_[i - 1];
        const double w = h0 / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        second_[i] = (rhs[i] - upper[i] * second_[i + 1]) / diag[i];
    }
}

std::size_t TabulatedFlux::segment(double t) const {
    if (t < times_.front() || t > times_.back()) {
        std::ostringstream os;
        os << "tabulated flux: t=" << t << " outside sample range ["
           << times_.front() << ", " << times_.back() << "]";
        throw std::out_of_range(os.str());
    }
    std::size_t lo = 0, hi = times_.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (times_[mid] <= t)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

double TabulatedFlux::value(double t) const {
    const std::size_t i = segment(t);
    const double h = times_[i + 1] - times_[i];
    const double a = (times_[i + 1] - t) / h;
    const double b = (t - times_[i]) / h;
    return a * fluxes_[i] + b * fluxes_[i + 1] +
           ((a * a * a - a) * second_[i] + (b * b * b - b) * second_[i + 1]) *
               h * h / 6.0;
}

double TabulatedFlux::derivative(double t) const {
    const std::size_t i = segment(t);
    const double h = times_[i + 1] - times_[i];
    const double a = (times_[i + 1] - t) / h;
    const double b = (t - times_[i]) / h;
    return (fluxes_[i + 1] - fluxes_[i]) / h +
           (-(3.0 * a * a - 1.0) * second_[i] +
            (3.0 * b * b - 1.0) * second_[i + 1]) *
               h / 6.0;
}

double flux_value(const FluxProfile& profile, double t) {
    return std::visit(
        [t](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, ConstantFlux>) {
                return p.phi0;
            } else if constexpr (std::is_same_v<P, RampFlux>) {
                return p.phi0 + p.rate * t;
            } else if constexpr (std::is_same_v<P, SinusoidFlux>) {
                return p.phi0 + p.phi1 * std::sin(p.omega * t);
            } else {
                return p.value(t);
            }
        },
        profile);
}

double flux_derivative(const FluxProfile& profile, double t) {
    return std::visit(
        [t](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, ConstantFlux>) {
                (void)t;
                return 0.0;
            } else if constexpr (std::is_same_v<P, RampFlux>) {
                return p.rate;
            } else if constexpr (std::is_same_v<P, SinusoidFlux>) {
                return p.phi1 * p.omega * std::cos(p.omega * t);
            } else {
                return p.derivative(t);
            }
        },
        profile);
}

FieldSample field_at(const SolenoidConfig& cfg, const CylPoint& p, double t) {
    const double phi = flux_value(cfg.profile, t);
    const double phidot = flux_derivative(cfg.profile, t);
    const double R = cfg.radius;
    FieldSample s;
    if (p.rho < R) {
        const double r2 = R * R;
        s.b_z = phi / (std::numbers::pi * r2);
        s.a_phi = p.rho * phi / (kTwoPi * r2);
        s.e_phi = -p.rho * phidot / (kTwoPi * r2);
    } else {
        // rho == R lands here; the branches agree there.
        s.b_z = 0.0;
        s.a_phi = phi / (kTwoPi * p.rho);
        s.e_phi = -phidot / (kTwoPi * p.rho);
    }
    return s;
}

}  // namespace tdab
