#include "tdab/sweep.hpp"

#include <fstream>
#include <numbers>
#include <sstream>

#include "tdab/errors.hpp"
#include "tdab/format.hpp"
#include "tdab/phase.hpp"

namespace tdab {

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
    if (!cfg.sweep)
        throw ConfigError("run_sweep: config has no [sweep] section");
    const SweepSpec& sweep = *cfg.sweep;

    const double t_f = encounter_time(cfg.electron);
    const double phi0 = flux_value(cfg.solenoid.profile, 0.0);

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(sweep.points));
    for (int i = 0; i < sweep.points; ++i) {
        const double x =
            sweep.omega_t_min + (sweep.omega_t_max - sweep.omega_t_min) *
                                    static_cast<double>(i) /
                                    static_cast<double>(sweep.points - 1);
        const double omega = x / t_f;
        const SinusoidFlux profile{phi0, sweep.ratio * phi0, omega};
        const SolenoidConfig solenoid{cfg.solenoid.radius, profile};
        const double step = std::min(
            cfg.numerics.rk4_step, required_step_bound(profile, t_f));

        SweepRow row;
        row.omega_t = x;
        row.f = f_factor(sweep.ratio, x);
        row.phi_ab = ab_phase_trajectories(profile, cfg.electron, solenoid,
                                           PhaseRoute::NumericTrajectories,
                                           step)
                         .phi_ab;
        row.phi_f = encounter_angle(cfg.electron, profile,
                                    cfg.numerics.quad_rel_tol);
        rows.push_back(row);
    }
    return rows;
}

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "omega_T,f,phi_AB,phi_f\n";
    for (const SweepRow& r : rows) {
        out << format_g17(r.omega_t) << ',' << format_g17(r.f) << ','
            << format_g17(r.phi_ab) << ',' << format_g17(r.phi_f) << '\n';
    }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    emit_csv(rows, os);
    return os.str();
}

void emit_plot_data(const std::vector<SweepRow>& rows, std::ostream& out,
                    bool printed_sign) {
    for (const SweepRow& r : rows) {
        // The printed-sign variant negates the oscillating part of f.
        const double f = printed_sign ? 2.0 - r.f : r.f;
        out << format_g17(r.omega_t) << ' ' << format_g17(f) << '\n';
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace tdab
