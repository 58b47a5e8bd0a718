#include "richards/constitutive.hpp"

#include <cmath>

#include "richards/errors.hpp"

namespace richards {

void SoilParams::validate() const {
    if (!(theta_r >= 0.0 && theta_r < theta_0 && theta_0 <= theta_s && theta_s < 1.0))
        throw config_error("soil: need 0 <= theta_r < theta_0 <= theta_s < 1");
    if (!(K_s > 0.0)) throw config_error("soil: K_s must be positive");
    if (!(h_cap > 0.0)) throw config_error("soil: h_cap must be positive");
    if (!(lambda > 0.0)) throw config_error("soil: lambda must be positive");
    if (!(m > 1.0)) throw config_error("soil: m must exceed 1 (Kirchhoff integral diverges otherwise)");
}

SoilParams sandy_clay() {
    return SoilParams{0.109, 0.321, 0.121, 0.002, 29.15, 0.168, 2.504};
}

SoilParams loam() {
    return SoilParams{0.027, 0.463, 0.040, 0.022, 11.15, 0.220, 2.660};
}

SoilParams soil_by_name(const std::string& name) {
    if (name == "sandy_clay") return sandy_clay();
    if (name == "loam") return loam();
    throw config_error("unknown soil name: " + name);
}

double saturation_from_suction(double h, const SoilParams& soil) {
    if (h <= soil.h_cap) return 1.0;
    return std::pow(h / soil.h_cap, -soil.lambda);
}

double suction_from_saturation(double S, const SoilParams& soil) {
    if (!(S > 0.0) || S > 1.0) throw std::domain_error("saturation must lie in (0, 1]");
    return soil.h_cap * std::pow(S, -1.0 / soil.lambda);
}

double relative_permeability(double h, const SoilParams& soil) {
    if (h <= soil.h_cap) return 1.0;
    return std::pow(h / soil.h_cap, -soil.m);
}

double kirchhoff(double h, const SoilParams& soil) {
    const double scale = soil.h_cap / (soil.m - 1.0);
    if (h >= soil.h_cap) return -scale * std::pow(h / soil.h_cap, 1.0 - soil.m);
    return (h - soil.h_cap) - scale;
}

double kirchhoff_inverse(double u, const SoilParams& soil) {
    if (!(u < 0.0)) throw std::domain_error("Kirchhoff variable must be negative");
    const double m1 = soil.m - 1.0;
    const double u_branch = -soil.h_cap / m1;
    if (u >= u_branch) {
        // Unsaturated branch. The initial states of interest sit within ~1e-10 of
        // u = 0, so evaluate through log space to keep relative accuracy there.
        return soil.h_cap * std::exp(-std::log(m1 * (-u) / soil.h_cap) / m1);
    }
    return u + soil.h_cap * soil.m / m1;  // saturated branch, k_r = 1
}

KirchhoffCoefficients coefficients(double h, const SoilParams& soil) {
    if (h <= soil.h_cap) return {0.0, 0.0};
    const double ratio = h / soil.h_cap;
    const double A = soil.drainable_porosity() * soil.lambda / (soil.K_s * soil.h_cap) *
                     std::pow(ratio, soil.m - soil.lambda - 1.0);
    const double B = -soil.m / h;
    return {A, B};
}

double moisture_content(double S, const SoilParams& soil) {
    if (S < -1e-9 || S > 1.0 + 1e-9) throw std::domain_error("saturation outside [0, 1]");
    const double clamped = S < 0.0 ? 0.0 : (S > 1.0 ? 1.0 : S);
    return soil.theta_r + clamped * soil.drainable_porosity();
}

}  // namespace richards
