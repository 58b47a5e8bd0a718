#pragma once

#include <utility>
#include <vector>

#include "richards/constitutive.hpp"

namespace richards {

// Configuration of the independent 1D finite-difference verification solver.
// Same column geometry and boundary/initial data as the meshless solver, but
// entirely disjoint numerics: it works in (theta, h) mixed form without the
// Kirchhoff transform, so a transform sign error cannot cancel out.
struct FdConfig {
    SoilParams soil{};
    double depth = 100.0;      // [cm]
    int n_z = 401;             // finer than the solver under test
    double dt = 0.01;          // [min]
    double total_time = 0.0;   // [min]
    std::vector<double> output_times;  // empty means {total_time}
    double tol_theta = 1e-11;  // inner modified-Picard tolerance on theta
    int max_inner = 300;
};

struct FdResult {
    std::vector<double> z;
    // (time, theta profile) pairs in schedule order.
    std::vector<std::pair<double, std::vector<double>>> profiles;
    double max_step_mass_error = 0.0;  // worst |storage change - boundary influx| per step
    double mass_closure_rel = 0.0;     // |total storage gain - cumulative influx| / influx
};

// Vertex-centered mixed-form Richards solve, modified Picard inner iterations,
// backward Euler, arithmetic-mean internodal conductivity. Throws on inner
// non-convergence; the oracle never falls back silently.
FdResult solve_fd_1d(const FdConfig& cfg);

}  // namespace richards
