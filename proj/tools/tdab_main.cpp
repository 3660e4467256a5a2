// Command-line front end: field evaluation, trajectory export, phase
// computation and the Fig.-style f(Omega T) parameter sweep.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>

#include "tdab/config.hpp"
#include "tdab/dynamics.hpp"
#include "tdab/errors.hpp"
#include "tdab/fields.hpp"
#include "tdab/format.hpp"
#include "tdab/phase.hpp"
#include "tdab/sweep.hpp"

namespace {

std::string trajectory_csv(const tdab::Trajectory& traj) {
    std::ostringstream os;
    os << "t,phi,omega\n";
    for (const auto& s : traj.samples) {
        os << tdab::format_g17(s.t) << ',' << tdab::format_g17(s.phi) << ','
           << tdab::format_g17(s.omega) << '\n';
    }
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{
        "tdab: time-dependent Aharonov-Bohm effect numerical laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    const auto add_config = [&config_path](CLI::App* cmd) {
        cmd->add_option("--config", config_path,
                        "path to the run configuration")
            ->required();
    };

    // fields
    auto* fields_cmd =
        app.add_subcommand("fields", "evaluate the solenoid field at one point");
    add_config(fields_cmd);
    double rho = 0.0, t_eval = 0.0;
    fields_cmd->add_option("--rho", rho, "radial coordinate")->required();
    fields_cmd->add_option("--t", t_eval, "evaluation time")->required();

    // trajectory
    auto* traj_cmd = app.add_subcommand(
        "trajectory", "integrate one branch and export t,phi,omega CSV");
    add_config(traj_cmd);
    std::string branch_name = "c1";
    double t_end = 0.0;
    std::string traj_out;
    traj_cmd->add_option("--branch", branch_name, "c1 or c2")
        ->check(CLI::IsMember({"c1", "c2"}));
    traj_cmd->add_option("--t-end", t_end, "integration end time")->required();
    traj_cmd->add_option("--out", traj_out, "output CSV path")->required();

    // phase
    auto* phase_cmd =
        app.add_subcommand("phase", "compute the AB phase by one route");
    add_config(phase_cmd);
    std::string route_name = "mean";
    phase_cmd->add_option("--route", route_name, "mean, closed or numeric")
        ->check(CLI::IsMember({"mean", "closed", "numeric"}));

    // sweep
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "run the f(Omega T) sweep and emit CSV / plot data");
    add_config(sweep_cmd);
    std::string sweep_out, plot_out, plot_alt_out;
    sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();
    sweep_cmd->add_option("--plot-data", plot_out,
                          "two-column (omega_T, f) plot data path");
    sweep_cmd->add_option(
        "--plot-data-printed-sign", plot_alt_out,
        "plot data with the opposite-sign f variant for figure comparison");

    CLI11_PARSE(app, argc, argv);

    const tdab::RunConfig cfg = tdab::load_config(config_path);

    if (fields_cmd->parsed()) {
        const tdab::FieldSample s =
            tdab::field_at(cfg.solenoid, {rho, 0.0, 0.0}, t_eval);
        std::cout << "B_z,A_phi,E_phi\n"
                  << tdab::format_g17(s.b_z) << ','
                  << tdab::format_g17(s.a_phi) << ','
                  << tdab::format_g17(s.e_phi) << '\n';
        return 0;
    }

    if (traj_cmd->parsed()) {
        const tdab::Branch branch =
            branch_name == "c1" ? tdab::Branch::C1 : tdab::Branch::C2;
        const tdab::Trajectory traj = tdab::integrate_trajectory(
            cfg.electron, cfg.solenoid, branch, t_end, cfg.numerics.rk4_step);
        tdab::write_file(traj_out, trajectory_csv(traj));
        return 0;
    }

    if (phase_cmd->parsed()) {
        tdab::PhaseResult result;
        if (route_name == "mean") {
            result = tdab::ab_phase_mean_flux(cfg.solenoid.profile,
                                              cfg.electron,
                                              cfg.numerics.quad_rel_tol);
        } else {
            const auto route = route_name == "closed"
                                   ? tdab::PhaseRoute::ClosedFormTrajectories
                                   : tdab::PhaseRoute::NumericTrajectories;
            result = tdab::ab_phase_trajectories(cfg.solenoid.profile,
                                                 cfg.electron, cfg.solenoid,
                                                 route, cfg.numerics.rk4_step);
        }
        std::cout << "T,phi_AB,phi_f,route\n"
                  << tdab::format_g17(result.encounter_time) << ','
                  << tdab::format_g17(result.phi_ab) << ','
                  << tdab::format_g17(result.phi_f) << ','
                  << tdab::phase_route_name(result.route) << '\n';
        return 0;
    }

    // sweep
    const std::vector<tdab::SweepRow> rows = tdab::run_sweep(cfg);
    tdab::write_file(sweep_out, tdab::sweep_csv(rows));
    if (!plot_out.empty()) {
        std::ostringstream os;
        tdab::emit_plot_data(rows, os);
        tdab::write_file(plot_out, os.str());
    }
    if (!plot_alt_out.empty()) {
        std::ostringstream os;
        tdab::emit_plot_data(rows, os, /*printed_sign=*/true);
        tdab::write_file(plot_alt_out, os.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tdab::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const tdab::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const tdab::SolverError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
