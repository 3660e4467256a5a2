#include "tdab/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "tdab/errors.hpp"

namespace tdab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Raw key/value view of the document, with duplicate and unknown-key
// detection handled by the caller.
std::map<std::string, std::string> tokenize(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto pos = line.find_first_of("#;"); pos != std::string::npos)
            line = line.substr(0, pos);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": empty key or value");
        if (!section.empty()) key = section + "." + key;
        if (kv.contains(key))
            throw ConfigError("config: duplicate key '" + key + "'");
        kv[key] = value;
    }
    return kv;
}

class KeyReader {
  public:
    explicit KeyReader(std::map<std::string, std::string> kv)
        : kv_(std::move(kv)) {}

    std::optional<std::string> get(const std::string& key) {
        used_.insert(key);
        if (const auto it = kv_.find(key); it != kv_.end()) return it->second;
        return std::nullopt;
    }

    std::string require(const std::string& key) {
        if (auto v = get(key)) return *v;
        throw ConfigError("config: missing required key '" + key + "'");
    }

    double number(const std::string& key) {
        const std::string v = require(key);
        return to_number(key, v);
    }

    double number_or(const std::string& key, double fallback) {
        if (auto v = get(key)) return to_number(key, *v);
        return fallback;
    }

    bool has(const std::string& key) const { return kv_.contains(key); }

    bool has_prefix(const std::string& prefix) const {
        const auto it = kv_.lower_bound(prefix);
        return it != kv_.end() && it->first.starts_with(prefix);
    }

    void reject_unknown() const {
        for (const auto& [key, value] : kv_) {
            if (!used_.contains(key))
                throw ConfigError("config: unknown key '" + key + "'");
        }
    }

  private:
    static double to_number(const std::string& key, const std::string& v) {
        std::size_t consumed = 0;
        double x = 0.0;
        try {
            x = std::stod(v, &consumed);
        } catch (const std::exception&) {
            throw ConfigError("config: key '" + key + "' value '" + v +
                              "' is not a number");
        }
        if (consumed != v.size())
            throw ConfigError("config: key '" + key + "' value '" + v +
                              "' is not a number");
        return x;
    }

    std::map<std::string, std::string> kv_;
    std::set<std::string> used_;
};

TabulatedFlux load_flux_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read flux CSV '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || trim(line) != "t,phi")
        throw ConfigError("flux CSV '" + path + "': expected header 't,phi'");
    std::vector<double> t, phi;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ConfigError("flux CSV '" + path + "' line " +
                              std::to_string(lineno) + ": expected 't,phi' row");
        try {
            t.push_back(std::stod(line.substr(0, comma)));
            phi.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw ConfigError("flux CSV '" + path + "' line " +
                              std::to_string(lineno) + ": bad number");
        }
    }
    try {
        return TabulatedFlux(std::move(t), std::move(phi));
    } catch (const std::invalid_argument& e) {
        throw ConfigError("flux CSV '" + path + "': " + std::string(e.what()));
    }
}

FluxProfile parse_profile(KeyReader& keys, const std::string& base_dir) {
    const std::string kind = keys.require("solenoid.profile.kind");
    if (kind == "constant") {
        return ConstantFlux{keys.number("solenoid.profile.phi0")};
    }
    if (kind == "ramp") {
        return RampFlux{keys.number("solenoid.profile.phi0"),
                        keys.number("solenoid.profile.rate")};
    }
    if (kind == "sinusoid") {
        SinusoidFlux s{keys.number("solenoid.profile.phi0"),
                       keys.number("solenoid.profile.phi1"),
                       keys.number("solenoid.profile.omega")};
        if (!(s.omega >= 0.0))
            throw ConfigError(
                "config: solenoid.profile.omega must be non-negative");
        return s;
    }
    if (kind == "tabulated") {
        std::filesystem::path p = keys.require("solenoid.profile.csv_path");
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        return load_flux_csv(p.string());
    }
    throw ConfigError(
        "config: solenoid.profile.kind must be one of "
        "constant|ramp|sinusoid|tabulated, got '" +
        kind + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& base_dir) {
    KeyReader keys(tokenize(text));
    RunConfig cfg;

    cfg.solenoid.radius = keys.number("solenoid.R");
    if (!(cfg.solenoid.radius > 0.0))
        throw ConfigError("config: solenoid.R must be > 0");
    cfg.solenoid.profile = parse_profile(keys, base_dir);

    cfg.electron.charge = keys.number("electron.e");
    cfg.electron.mass = keys.number("electron.m");
    cfg.electron.orbit_radius = keys.number("electron.rho");
    cfg.electron.omega0 = keys.number("electron.omega0");
    if (!(cfg.electron.charge > 0.0))
        throw ConfigError("config: electron.e must be > 0");
    if (!(cfg.electron.mass > 0.0))
        throw ConfigError("config: electron.m must be > 0");
    if (!(cfg.electron.omega0 > 0.0))
        throw ConfigError("config: electron.omega0 must be > 0");
    if (!(cfg.electron.orbit_radius > cfg.solenoid.radius))
        throw ConfigError("config: electron.rho must exceed solenoid.R");
    if (auto mode = keys.get("electron.coupling_mode")) {
        if (*mode == "consistent")
            cfg.electron.coupling = CouplingMode::Consistent;
        else if (*mode == "paper_literal")
            cfg.electron.coupling = CouplingMode::PaperLiteral;
        else
            throw ConfigError(
                "config: electron.coupling_mode must be "
                "consistent|paper_literal, got '" +
                *mode + "'");
    }

    const double t_f = std::numbers::pi / cfg.electron.omega0;
    const double step_bound =
        required_step_bound(cfg.solenoid.profile, t_f);
    const double default_step = std::min(step_bound, t_f / 100.0);
    cfg.numerics.rk4_step = keys.number_or("numerics.rk4_step", default_step);
    cfg.numerics.quad_rel_tol =
        keys.number_or("numerics.quad_rel_tol", 1e-10);
    if (!(cfg.numerics.rk4_step > 0.0))
        throw ConfigError("config: numerics.rk4_step must be > 0");
    if (cfg.numerics.rk4_step > step_bound * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "config: numerics.rk4_step=" << cfg.numerics.rk4_step
           << " exceeds the step bound " << step_bound
           << " required by the flux profile";
        throw ConfigError(os.str());
    }
    if (!(cfg.numerics.quad_rel_tol > 0.0) ||
        cfg.numerics.quad_rel_tol > 1e-4)
        throw ConfigError("config: numerics.quad_rel_tol must be in (0, 1e-4]");

    if (keys.has_prefix("sweep.")) {
        SweepSpec sweep;
        sweep.omega_t_min = keys.number("sweep.omega_T_min");
        sweep.omega_t_max = keys.number("sweep.omega_T_max");
        const double points = keys.number("sweep.points");
        sweep.ratio = keys.number("sweep.ratio");
        if (!(sweep.omega_t_min > 0.0))
            throw ConfigError("config: sweep.omega_T_min must be > 0");
        if (!(sweep.omega_t_max > sweep.omega_t_min))
            throw ConfigError(
                "config: sweep.omega_T_max must exceed sweep.omega_T_min");
        if (points < 2.0 || points != std::floor(points))
            throw ConfigError("config: sweep.points must be an integer >= 2");
        sweep.points = static_cast<int>(points);
        cfg.sweep = sweep;
    }

    keys.reject_unknown();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string dir =
        std::filesystem::path(path).parent_path().string();
    return parse_config(buf.str(), dir.empty() ? "." : dir);
}

}  // namespace tdab
