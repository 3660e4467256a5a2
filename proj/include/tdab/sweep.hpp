#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tdab/config.hpp"

namespace tdab {

struct SweepRow {
    double omega_t = 0.0;  // Omega * T
    double f = 1.0;        // mean-flux factor, f_factor(ratio, omega_t)
    double phi_ab = 0.0;   // from RK4 trajectories
    double phi_f = 0.0;    // encounter angle
};

/// Evaluates the offset-sinusoid sweep: T = pi/omega0 is held fixed and
/// Omega = omega_t/T varies over a uniform grid; phi0 is the configured
/// profile's flux at t = 0 and phi1 = ratio * phi0. phi_ab comes from full
/// RK4 trajectories, phi_f from the encounter-angle closed form. Rows are
/// ordered by omega_t. Throws ConfigError when no sweep block is present.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);

/// CSV with header `omega_T,f,phi_AB,phi_f`, 17-significant-digit floats,
/// LF line endings.
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Two-column whitespace-separated (omega_T, f), same numeric formatting.
/// `printed_sign` selects the opposite-sign f variant for figure
/// comparison.
void emit_plot_data(const std::vector<SweepRow>& rows, std::ostream& out,
                    bool printed_sign = false);

/// Writes `content` to `path`; throws IoError if the destination is not
/// writable.
void write_file(const std::string& path, const std::string& content);

}  // namespace tdab
