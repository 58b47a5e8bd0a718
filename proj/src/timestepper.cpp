#include "richards/timestepper.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "richards/errors.hpp"

namespace richards {

namespace {

void recover(KirchhoffField& field, const SoilParams& soil) {
    const std::size_t n = static_cast<std::size_t>(field.u.size());
    field.h.resize(n);
    field.S.resize(n);
    field.theta.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (!(field.u(static_cast<Eigen::Index>(s)) < 0.0))
            throw state_error("Kirchhoff value left the negative half-line at node " +
                                  std::to_string(s),
                              static_cast<long>(s));
        field.h[s] = kirchhoff_inverse(field.u(static_cast<Eigen::Index>(s)), soil);
        field.S[s] = saturation_from_suction(field.h[s], soil);
        field.theta[s] = moisture_content(field.S[s], soil);
    }
}

std::vector<double> suction_of(const Eigen::VectorXd& u, const SoilParams& soil) {
    std::vector<double> h(static_cast<std::size_t>(u.size()));
    for (Eigen::Index s = 0; s < u.size(); ++s) {
        if (!(u(s) < 0.0))
            throw state_error("Kirchhoff value left the negative half-line at node " +
                                  std::to_string(s),
                              static_cast<long>(s));
        h[static_cast<std::size_t>(s)] = kirchhoff_inverse(u(s), soil);
    }
    return h;
}

}  // namespace

StepContext::StepContext(const NodeSet& nodes_in, const std::vector<Stencil>& stencils,
                         const ScenarioConfig& cfg)
    : nodes(nodes_in),
      soil(cfg.soil),
      assembler(nodes_in, stencils, cfg.eps),
      tol(cfg.tol),
      max_picard(cfg.max_picard) {
    bc.top = kirchhoff(soil.h_cap, soil);  // saturated top, theta = theta_s
    bc.bottom = kirchhoff(suction_from_saturation(soil.initial_saturation(), soil), soil);
}

KirchhoffField initial_field(const NodeSet& nodes, const SoilParams& soil) {
    soil.validate();
    const double S0 = soil.initial_saturation();
    const double u0 = kirchhoff(suction_from_saturation(S0, soil), soil);
    const double u_top = kirchhoff(soil.h_cap, soil);

    KirchhoffField field;
    field.t = 0.0;
    field.u.resize(static_cast<Eigen::Index>(nodes.size()));
    for (std::size_t s = 0; s < nodes.size(); ++s)
        field.u(static_cast<Eigen::Index>(s)) =
            nodes.kind[s] == NodeKind::dirichlet_top ? u_top : u0;
    recover(field, soil);
    return field;
}

std::pair<KirchhoffField, PicardReport> picard_step(const KirchhoffField& field_n, double dt,
                                                    StepContext& ctx) {
    PicardReport report;
    Eigen::VectorXd um = field_n.u;
    SparseSystem sys;
    for (int m = 0; m < ctx.max_picard; ++m) {
        const std::vector<double> h = suction_of(um, ctx.soil);
        ctx.assembler.assemble(ctx.soil, h, field_n.u, dt, ctx.bc, sys);
        Eigen::VectorXd next = ctx.solver.solve(sys);
        const double delta = (next - um).lpNorm<Eigen::Infinity>();
        report.deltas.push_back(delta);
        report.iterations = m + 1;
        um.swap(next);
        if (delta <= ctx.tol) {
            report.converged = true;
            break;
        }
    }
    if (!report.converged)
        throw convergence_error("Picard iteration did not converge within " +
                                    std::to_string(ctx.max_picard) + " iterations (last delta " +
                                    std::to_string(report.deltas.back()) + ")",
                                report.deltas);

    KirchhoffField out;
    out.t = field_n.t + dt;
    out.u = std::move(um);
    recover(out, ctx.soil);
    return {std::move(out), std::move(report)};
}

Trajectory run_transient(const ScenarioConfig& cfg, std::ostream* diag, Trajectory* partial) {
    cfg.validate();
    const NodeSet nodes = cfg.dimension == 1 ? grid_1d(cfg.depth, cfg.n_z)
                                             : grid_2d(cfg.width, cfg.depth, cfg.n_x, cfg.n_z);
    const std::vector<Stencil> stencils = build_stencils(nodes, cfg.n_s);
    StepContext ctx(nodes, stencils, cfg);

    const long n_steps = std::lround(cfg.total_time / cfg.dt);
    std::vector<long> output_steps;
    output_steps.reserve(cfg.output_times.size());
    for (double t : cfg.output_times) output_steps.push_back(std::lround(t / cfg.dt));

    Trajectory traj;
    traj.max_condition = ctx.assembler.max_condition();
    KirchhoffField field = initial_field(nodes, cfg.soil);

    auto emit = [&](long step) {
        for (std::size_t k = 0; k < output_steps.size(); ++k)
            if (output_steps[k] == step) {
                KirchhoffField snapshot = field;
                snapshot.t = cfg.output_times[k];  // scheduled stamp, not accumulated dt
                traj.fields.push_back(std::move(snapshot));
            }
    };
    emit(0);

    try {
        for (long n = 0; n < n_steps; ++n) {
            auto [next, report] = picard_step(field, cfg.dt, ctx);
            field = std::move(next);
            traj.max_iterations = std::max(traj.max_iterations, report.iterations);
            if (diag)
                *diag << "step " << (n + 1) << " t=" << field.t
                      << " picard=" << report.iterations
                      << " delta=" << report.deltas.back()
                      << " residual=" << ctx.solver.last_residual() << "\n";
            traj.reports.push_back(std::move(report));
            emit(n + 1);
        }
    } catch (...) {
        traj.max_residual_ratio = ctx.solver.max_residual_ratio();
        if (partial) *partial = traj;
        throw;
    }

    traj.max_residual_ratio = ctx.solver.max_residual_ratio();
    return traj;
}

}  // namespace richards
