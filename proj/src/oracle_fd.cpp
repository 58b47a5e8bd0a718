#include "richards/oracle_fd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "richards/errors.hpp"

namespace richards {

namespace {

// dtheta/dh; zero on the saturated branch like the retention curve itself.
double moisture_capacity(double h, const SoilParams& soil) {
    if (h <= soil.h_cap) return 0.0;
    return -soil.drainable_porosity() * soil.lambda / soil.h_cap *
           std::pow(h / soil.h_cap, -soil.lambda - 1.0);
}

double theta_of(double h, const SoilParams& soil) {
    return moisture_content(saturation_from_suction(h, soil), soil);
}

// In-place Thomas solve; a is the subdiagonal (a[0] unused), c the superdiagonal.
void tridiag(std::vector<double>& a, std::vector<double>& b, std::vector<double>& c,
             std::vector<double>& r) {
    const std::size_t n = b.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        r[i] -= w * r[i - 1];
    }
    r[n - 1] /= b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) r[i] = (r[i] - c[i] * r[i + 1]) / b[i];
}

}  // namespace

FdResult solve_fd_1d(const FdConfig& cfg) {
    cfg.soil.validate();
    if (cfg.n_z < 3) throw config_error("oracle: need at least 3 nodes");
    if (!(cfg.dt > 0.0)) throw config_error("oracle: dt must be positive");
    if (!(cfg.total_time >= 0.0)) throw config_error("oracle: total_time must be nonnegative");

    const SoilParams& soil = cfg.soil;
    const int n = cfg.n_z;
    const double dz = cfg.depth / (n - 1);
    const double h0 = suction_from_saturation(soil.initial_saturation(), soil);

    FdResult out;
    out.z.resize(n);
    for (int i = 0; i < n; ++i) out.z[i] = static_cast<double>(i) * dz;

    std::vector<double> h(n, h0);
    h[0] = soil.h_cap;

    std::vector<double> output_times = cfg.output_times;
    if (output_times.empty()) output_times = {cfg.total_time};
    std::vector<long> output_steps;
    for (double t : output_times) output_steps.push_back(std::lround(t / cfg.dt));

    auto emit = [&](long step) {
        for (std::size_t k = 0; k < output_steps.size(); ++k)
            if (output_steps[k] == step) {
                std::vector<double> theta(n);
                for (int i = 0; i < n; ++i) theta[i] = theta_of(h[i], soil);
                out.profiles.emplace_back(output_times[k], std::move(theta));
            }
    };
    emit(0);

    const long n_steps = std::lround(cfg.total_time / cfg.dt);
    std::vector<double> theta_n(n), theta_m(n), K(n), Kf(n - 1);
    std::vector<double> a(n - 2), b(n - 2), c(n - 2), r(n - 2);
    for (int i = 0; i < n; ++i) theta_n[i] = theta_of(h[i], soil);

    double storage0 = 0.0;
    for (int i = 1; i < n - 1; ++i) storage0 += theta_n[i] * dz;
    double cumulative_in = 0.0;

    for (long step = 0; step < n_steps; ++step) {
        bool converged = false;
        for (int it = 0; it < cfg.max_inner; ++it) {
            for (int i = 0; i < n; ++i) K[i] = soil.K_s * relative_permeability(h[i], soil);
            for (int i = 0; i < n - 1; ++i) Kf[i] = 0.5 * (K[i] + K[i + 1]);
            for (int i = 0; i < n; ++i) theta_m[i] = theta_of(h[i], soil);

            for (int i = 1; i < n - 1; ++i) {
                const int k = i - 1;
                a[k] = Kf[i - 1] / (dz * dz);
                c[k] = Kf[i] / (dz * dz);
                b[k] = moisture_capacity(h[i], soil) / cfg.dt - (Kf[i - 1] + Kf[i]) / (dz * dz);
                const double flux_div =
                    (Kf[i] * (h[i + 1] - h[i]) - Kf[i - 1] * (h[i] - h[i - 1])) / (dz * dz);
                const double gravity = (Kf[i] - Kf[i - 1]) / dz;
                r[k] = -(theta_m[i] - theta_n[i]) / cfg.dt - flux_div - gravity;
            }
            tridiag(a, b, c, r);
            double dtheta_max = 0.0;
            for (int i = 1; i < n - 1; ++i) {
                h[i] += r[i - 1];
                dtheta_max = std::max(dtheta_max, std::abs(theta_of(h[i], soil) - theta_m[i]));
            }
            if (dtheta_max <= cfg.tol_theta) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw convergence_error(
                "oracle inner iteration exhausted at step " + std::to_string(step), {});

        for (int i = 0; i < n; ++i) K[i] = soil.K_s * relative_permeability(h[i], soil);
        for (int i = 0; i < n - 1; ++i) Kf[i] = 0.5 * (K[i] + K[i + 1]);
        double dstorage = 0.0;
        for (int i = 1; i < n - 1; ++i) {
            const double th = theta_of(h[i], soil);
            dstorage += (th - theta_n[i]) * dz;
            theta_n[i] = th;
        }
        const double q_top = Kf[0] * ((h[1] - h[0]) / dz + 1.0);
        const double q_bottom = Kf[n - 2] * ((h[n - 1] - h[n - 2]) / dz + 1.0);
        const double inflow = cfg.dt * (q_top - q_bottom);
        out.max_step_mass_error = std::max(out.max_step_mass_error, std::abs(dstorage - inflow));
        cumulative_in += inflow;
        emit(step + 1);
    }

    double storage1 = 0.0;
    for (int i = 1; i < n - 1; ++i) storage1 += theta_n[i] * dz;
    out.mass_closure_rel =
        std::abs((storage1 - storage0) - cumulative_in) / std::max(std::abs(cumulative_in), 1e-300);
    return out;
}

}  // namespace richards
