#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "richards/csv_io.hpp"
#include "richards/errors.hpp"
#include "richards/metrics.hpp"
#include "richards/oracle_fd.hpp"
#include "richards/timestepper.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = "out";
    bool quiet = false;
    bool plot_script = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "scenario config file (key = value lines)")
        ->required();
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_flag("--quiet", opts.quiet, "suppress per-step progress records");
    cmd->add_flag("--plot-script", opts.plot_script, "emit a plotting script beside the CSVs");
}

richards::FdConfig oracle_config(const richards::ScenarioConfig& cfg) {
    richards::FdConfig fd;
    fd.soil = cfg.soil;
    fd.depth = cfg.depth;
    fd.n_z = cfg.oracle_n_z;
    fd.dt = cfg.oracle_dt;
    fd.total_time = cfg.total_time;
    fd.output_times = cfg.output_times;
    return fd;
}

int run_solver(const CommonOpts& opts) {
    const richards::ScenarioConfig cfg = richards::load_config(opts.config_path);
    richards::Trajectory traj =
        richards::run_transient(cfg, opts.quiet ? nullptr : &std::cerr);
    const richards::NodeSet nodes =
        cfg.dimension == 1 ? richards::grid_1d(cfg.depth, cfg.n_z)
                           : richards::grid_2d(cfg.width, cfg.depth, cfg.n_x, cfg.n_z);
    richards::write_profiles(traj, nodes, opts.out_dir);
    richards::write_mass_series(traj, nodes, opts.out_dir + "/mass.csv");
    richards::write_run_meta(cfg, opts.out_dir + "/run_meta.txt");
    if (opts.plot_script) richards::write_plot_script(opts.out_dir + "/plot.py");
    if (!opts.quiet)
        std::cerr << "run complete: " << traj.fields.size() << " profiles, max picard "
                  << traj.max_iterations << ", max residual ratio " << traj.max_residual_ratio
                  << "\n";
    return 0;
}

int run_oracle(const CommonOpts& opts) {
    const richards::ScenarioConfig cfg = richards::load_config(opts.config_path);
    if (cfg.dimension != 1)
        throw richards::config_error("oracle: only 1D scenarios are supported");
    const richards::FdResult result = richards::solve_fd_1d(oracle_config(cfg));
    richards::write_oracle_profiles(result, cfg.soil, opts.out_dir);
    richards::write_run_meta(cfg, opts.out_dir + "/run_meta.txt");
    if (opts.plot_script) richards::write_plot_script(opts.out_dir + "/plot.py");
    if (!opts.quiet)
        std::cerr << "oracle complete: mass closure " << result.mass_closure_rel
                  << ", max step error " << result.max_step_mass_error << "\n";
    return 0;
}

int run_compare(const CommonOpts& opts) {
    const richards::ScenarioConfig cfg = richards::load_config(opts.config_path);
    if (cfg.dimension != 1)
        throw richards::config_error("compare: only 1D scenarios are supported");
    richards::Trajectory traj =
        richards::run_transient(cfg, opts.quiet ? nullptr : &std::cerr);
    const richards::FdResult oracle = richards::solve_fd_1d(oracle_config(cfg));
    const richards::NodeSet nodes = richards::grid_1d(cfg.depth, cfg.n_z);

    std::vector<std::pair<double, richards::ComparisonReport>> rows;
    for (const richards::KirchhoffField& field : traj.fields) {
        const std::vector<double>* ref = nullptr;
        for (const auto& [t, theta] : oracle.profiles)
            if (t == field.t) ref = &theta;
        if (!ref) continue;
        rows.emplace_back(field.t, richards::compare_profiles(nodes.z, field.theta,
                                                              oracle.z, *ref));
    }
    richards::write_profiles(traj, nodes, opts.out_dir);
    richards::write_mass_series(traj, nodes, opts.out_dir + "/mass.csv");
    richards::write_oracle_profiles(oracle, cfg.soil, opts.out_dir);
    richards::write_comparison(rows, opts.out_dir + "/comparison.csv");
    richards::write_run_meta(cfg, opts.out_dir + "/run_meta.txt");
    if (opts.plot_script) richards::write_plot_script(opts.out_dir + "/plot.py");
    if (!opts.quiet)
        for (const auto& [t, report] : rows)
            std::cerr << "t=" << t << " rmse=" << report.rmse << " rel_l1=" << report.rel_l1
                      << "\n";
    return 0;
}

int run_dump_matrix(const CommonOpts& opts) {
    const richards::ScenarioConfig cfg = richards::load_config(opts.config_path);
    const richards::NodeSet nodes =
        cfg.dimension == 1 ? richards::grid_1d(cfg.depth, cfg.n_z)
                           : richards::grid_2d(cfg.width, cfg.depth, cfg.n_x, cfg.n_z);
    const std::vector<richards::Stencil> stencils = richards::build_stencils(nodes, cfg.n_s);
    richards::StepContext ctx(nodes, stencils, cfg);
    const richards::KirchhoffField field = richards::initial_field(nodes, cfg.soil);
    const richards::SparseSystem sys =
        ctx.assembler.assemble(cfg.soil, field.h, field.u, cfg.dt, ctx.bc);

    std::filesystem::create_directories(opts.out_dir);
    std::ofstream out(opts.out_dir + "/matrix.txt", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write matrix dump");
    richards::dump_matrix(sys, out);
    if (!opts.quiet)
        std::cerr << "dumped " << sys.matrix.nonZeros() << " entries for "
                  << nodes.size() << " nodes\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Meshless multiquadric-collocation solver for unsaturated water flow"};
    app.require_subcommand(1);

    CommonOpts run_opts, oracle_opts, compare_opts, dump_opts;
    add_common(app.add_subcommand("run", "solve a scenario"), run_opts);
    add_common(app.add_subcommand("oracle", "run the finite-difference verification solver"),
               oracle_opts);
    add_common(app.add_subcommand("compare", "run solver and verification solver, emit metrics"),
               compare_opts);
    add_common(app.add_subcommand("dump-matrix", "dump the first assembled system matrix"),
               dump_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("run")) return run_solver(run_opts);
        if (app.got_subcommand("oracle")) return run_oracle(oracle_opts);
        if (app.got_subcommand("compare")) return run_compare(compare_opts);
        if (app.got_subcommand("dump-matrix")) return run_dump_matrix(dump_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
