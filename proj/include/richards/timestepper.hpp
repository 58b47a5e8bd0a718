#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "richards/config.hpp"
#include "richards/constitutive.hpp"
#include "richards/pointset.hpp"
#include "richards/system.hpp"

namespace richards {

// Solver state at one time level. Recovery order is u -> h -> S -> theta so
// every reported quantity is consistent with the constitutive maps.
struct KirchhoffField {
    double t = 0.0;
    Eigen::VectorXd u;
    std::vector<double> h, S, theta;
};

struct PicardReport {
    int iterations = 0;
    std::vector<double> deltas;
    bool converged = false;
};

// Everything picard_step needs besides the state: geometry, cached assembler,
// pattern-caching solver, boundary data, iteration controls.
struct StepContext {
    const NodeSet& nodes;
    SoilParams soil;
    Assembler assembler;
    LinearSolver solver;
    BoundaryValues bc;
    double tol = 1e-8;
    int max_picard = 50;

    StepContext(const NodeSet& nodes_in, const std::vector<Stencil>& stencils,
                const ScenarioConfig& cfg);
};

// Uniform initial moisture theta_0 mapped through the retention curve and the
// Kirchhoff transform; Dirichlet nodes carry their boundary values from t=0+.
KirchhoffField initial_field(const NodeSet& nodes, const SoilParams& soil);

// One backward-Euler step, Picard-linearized. Coefficients A, B refresh from the
// latest iterate; the iteration seeds from the previous time level. Throws
// convergence_error (with the delta history) when max_picard is exhausted.
std::pair<KirchhoffField, PicardReport> picard_step(const KirchhoffField& field_n, double dt,
                                                    StepContext& ctx);

struct Trajectory {
    std::vector<KirchhoffField> fields;  // at the scheduled output times
    std::vector<PicardReport> reports;   // one per time step taken
    int max_iterations = 0;
    double max_residual_ratio = 0.0;  // max residual / (1 + ||rhs||_inf) over all solves
    double max_condition = 0.0;       // worst local interpolation conditioning
};

// Runs the scenario start to finish. Progress records (step, time, iterations,
// residual) go to `diag` when given. On a step failure the partial trajectory
// is attached to the rethrown error's context by the caller; fields gathered so
// far are preserved in `partial` when non-null.
Trajectory run_transient(const ScenarioConfig& cfg, std::ostream* diag = nullptr,
                         Trajectory* partial = nullptr);

}  // namespace richards
