#pragma once

#include <optional>
#include <string>

#include "tdab/dynamics.hpp"
#include "tdab/fields.hpp"

namespace tdab {

struct SweepSpec {
    double omega_t_min = 0.5;
    double omega_t_max = 40.0;
    int points = 200;
    double ratio = 0.1;  // phi1/phi0
};

struct NumericsSpec {
    double rk4_step = 0.0;        // defaulted from the dynamics step bound
    double quad_rel_tol = 1e-10;  // in (0, 1e-4]
};

struct RunConfig {
    SolenoidConfig solenoid;
    ElectronParams electron;
    NumericsSpec numerics;
    std::optional<SweepSpec> sweep;
};

/// Parses the INI-style configuration document (sections [solenoid],
/// [solenoid.profile], [electron], [numerics], [sweep]; `key = value`
/// lines; '#'/';' comments). Applies defaults, validates every invariant
/// and rejects unknown keys with a diagnostic naming the key. A relative
/// `solenoid.profile.csv_path` is resolved against `base_dir`.
/// Throws ConfigError on any problem.
RunConfig parse_config(const std::string& text, const std::string& base_dir = ".");

/// Reads the file and parses it; relative csv_path entries resolve against
/// the config file's directory. Throws IoError if unreadable.
RunConfig load_config(const std::string& path);

}  // namespace tdab
