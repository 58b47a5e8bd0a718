#pragma once

#include <string>
#include <vector>

#include "richards/config.hpp"
#include "richards/metrics.hpp"
#include "richards/oracle_fd.hpp"
#include "richards/pointset.hpp"
#include "richards/timestepper.hpp"

namespace richards {

// All CSV output is deterministic and written with round-trip (%.17g) precision;
// identical runs produce byte-identical files.

// One profile CSV per output time: header z,theta,S,h,u (1D) or x,z,theta,S,h,u
// (2D), rows in node-index order. Returns the paths written.
std::vector<std::string> write_profiles(const Trajectory& traj, const NodeSet& nodes,
                                        const std::string& out_dir);

// Mass diagnostics over the trajectory: header t,mass_per_unit_length.
void write_mass_series(const Trajectory& traj, const NodeSet& nodes, const std::string& path);

// Oracle profiles in the 1D profile format (S, h, u recovered from theta).
std::vector<std::string> write_oracle_profiles(const FdResult& result, const SoilParams& soil,
                                               const std::string& out_dir);

// Every effective parameter plus which keys fell back to defaults.
void write_run_meta(const ScenarioConfig& cfg, const std::string& path);

// Comparison rows: header t,rmse,rel_l1,n_points,interpolated.
void write_comparison(const std::vector<std::pair<double, ComparisonReport>>& rows,
                      const std::string& path);

// Generic matplotlib script that picks up the CSVs next to it.
void write_plot_script(const std::string& path);

// Stable file-name fragment for a time stamp ("600", "0.5", ...).
std::string time_tag(double t);

}  // namespace richards
