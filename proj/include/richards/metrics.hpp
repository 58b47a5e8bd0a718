#pragma once

#include <span>
#include <vector>

#include "richards/pointset.hpp"

namespace richards {

struct ComparisonReport {
    double rmse = 0.0;
    double rel_l1 = 0.0;
    std::size_t n_points = 0;
    bool interpolated = false;  // true when the reference was regridded first
};

// sqrt(mean((a-b)^2)); lengths must match.
double rmse(std::span<const double> a, std::span<const double> b);

// sum|a - b_ref| / sum|b_ref|; the reference norm must be nonzero.
double rel_l1(std::span<const double> a, std::span<const double> b_ref);

// Trapezoidal integral of theta over the tensor grid; divided by the width in
// 2D, so both dimensions report mass per unit length of the top boundary.
double total_mass(std::span<const double> theta, const NodeSet& nodes);

// Piecewise-linear interpolation of (z, values) onto targets; strictly
// increasing z required, extrapolation refused.
std::vector<double> regrid_linear(std::span<const double> z, std::span<const double> values,
                                  std::span<const double> targets);

// Regrids the reference onto the sample grid when the grids differ, then
// evaluates both metrics.
ComparisonReport compare_profiles(std::span<const double> z_sample,
                                  std::span<const double> sample,
                                  std::span<const double> z_ref, std::span<const double> ref);

}  // namespace richards
