#pragma once

#include <string>

namespace richards {

// Brooks-Corey / power-law hydraulic parameters for one homogeneous soil.
// Units: lengths in cm, time in minutes.
struct SoilParams {
    double theta_r;  // residual moisture content [-]
    double theta_s;  // saturated moisture content [-]
    double theta_0;  // initial moisture content [-]
    double K_s;      // saturated hydraulic conductivity [cm/min]
    double h_cap;    // capillary rise (air entry suction) [cm]
    double lambda;   // retention exponent [-]
    double m;        // relative-permeability exponent (lambda * beta) [-]

    double drainable_porosity() const { return theta_s - theta_r; }
    double initial_saturation() const { return (theta_0 - theta_r) / (theta_s - theta_r); }

    // Throws config_error on an invalid parameter set (m <= 1 included:
    // the Kirchhoff integral only converges for m > 1).
    void validate() const;
};

SoilParams sandy_clay();
SoilParams loam();

// Looks up one of the named soils above; throws config_error on unknown names.
SoilParams soil_by_name(const std::string& name);

// Linearization coefficients of the transformed Richards equation,
//   A * du/dt - lap(u) - B * du/dz = 0.
struct KirchhoffCoefficients {
    double A;  // time coefficient [min/cm^2], >= 0
    double B;  // gravity coefficient [1/cm], <= 0
};

// Effective saturation S(h). S = 1 on the saturated branch h <= h_cap,
// S = (h/h_cap)^(-lambda) otherwise.
double saturation_from_suction(double h, const SoilParams& soil);

// Inverse retention curve, h = h_cap * S^(-1/lambda). Domain: 0 < S <= 1.
double suction_from_saturation(double S, const SoilParams& soil);

// Relative permeability k_r(h) in (0, 1]; power law with exponent m above h_cap.
double relative_permeability(double h, const SoilParams& soil);

// Kirchhoff variable u(h) = -integral_h^inf k_r(h') dh', in closed form. Always < 0.
double kirchhoff(double h, const SoilParams& soil);

// Inverse of kirchhoff(); domain u < 0.
double kirchhoff_inverse(double u, const SoilParams& soil);

// A(h), B(h). Both are exactly zero on the saturated branch h <= h_cap.
KirchhoffCoefficients coefficients(double h, const SoilParams& soil);

// theta = theta_r + S * (theta_s - theta_r); tolerates |S| outside [0,1] by up to 1e-9.
double moisture_content(double S, const SoilParams& soil);

}  // namespace richards
