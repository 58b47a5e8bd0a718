#pragma once

#include <string>
#include <vector>

#include "richards/constitutive.hpp"

namespace richards {

// Full description of one solver run. Parsed from a flat `key = value` text
// document (# starts a comment). Fully deterministic: no seeds anywhere.
struct ScenarioConfig {
    int dimension = 1;
    double depth = 100.0;  // L [cm]
    double width = 100.0;  // l [cm], 2D only
    int n_z = 201;
    int n_x = 101;  // 2D only
    double dt = 0.05;          // [min]
    double total_time = 0.0;   // T [min]
    std::vector<double> output_times;  // sorted, within [0, T]; empty means {T}

    std::string soil_name;  // "sandy_clay", "loam", or "custom"
    SoilParams soil{};

    double eps = 0.6;       // kernel shape parameter
    int n_s = 5;            // stencil size
    double tol = 1e-8;      // Picard tolerance on max |u change| [cm]
    int max_picard = 50;

    // Verification-solver resolution used by comparisons (1D only).
    int oracle_n_z = 401;
    double oracle_dt = 0.01;

    // Config keys that fell back to their defaults, echoed into run metadata.
    std::vector<std::string> defaulted;

    void validate() const;
};

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

}  // namespace richards
