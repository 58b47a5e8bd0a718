#include "richards/csv_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace richards {

namespace {

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    return out;
}

}  // namespace

std::string time_tag(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

std::vector<std::string> write_profiles(const Trajectory& traj, const NodeSet& nodes,
                                        const std::string& out_dir) {
    if (traj.fields.empty()) throw std::invalid_argument("write_profiles: empty trajectory");
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> paths;
    for (const KirchhoffField& field : traj.fields) {
        const std::string path = out_dir + "/profile_t" + time_tag(field.t) + ".csv";
        std::ofstream out = open_out(path);
        out << (nodes.dim == 2 ? "x,z,theta,S,h,u\n" : "z,theta,S,h,u\n");
        for (std::size_t s = 0; s < nodes.size(); ++s) {
            if (nodes.dim == 2) out << g17(nodes.x[s]) << ',';
            out << g17(nodes.z[s]) << ',' << g17(field.theta[s]) << ',' << g17(field.S[s]) << ','
                << g17(field.h[s]) << ',' << g17(field.u(static_cast<Eigen::Index>(s))) << '\n';
        }
        paths.push_back(path);
    }
    return paths;
}

void write_mass_series(const Trajectory& traj, const NodeSet& nodes, const std::string& path) {
    if (traj.fields.empty()) throw std::invalid_argument("write_mass_series: empty trajectory");
    std::ofstream out = open_out(path);
    out << "t,mass_per_unit_length\n";
    for (const KirchhoffField& field : traj.fields)
        out << g17(field.t) << ',' << g17(total_mass(field.theta, nodes)) << '\n';
}

std::vector<std::string> write_oracle_profiles(const FdResult& result, const SoilParams& soil,
                                               const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> paths;
    for (const auto& [t, theta] : result.profiles) {
        const std::string path = out_dir + "/oracle_t" + time_tag(t) + ".csv";
        std::ofstream out = open_out(path);
        out << "z,theta,S,h,u\n";
        for (std::size_t i = 0; i < theta.size(); ++i) {
            double S = (theta[i] - soil.theta_r) / soil.drainable_porosity();
            if (S > 1.0) S = 1.0;
            const double h = suction_from_saturation(S, soil);
            const double u = kirchhoff(h, soil);
            out << g17(result.z[i]) << ',' << g17(theta[i]) << ',' << g17(S) << ',' << g17(h)
                << ',' << g17(u) << '\n';
        }
        paths.push_back(path);
    }
    return paths;
}

void write_run_meta(const ScenarioConfig& cfg, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "dimension = " << cfg.dimension << '\n';
    out << "depth = " << g17(cfg.depth) << '\n';
    if (cfg.dimension == 2) {
        out << "width = " << g17(cfg.width) << '\n';
        out << "n_x = " << cfg.n_x << '\n';
    }
    out << "n_z = " << cfg.n_z << '\n';
    out << "dt = " << g17(cfg.dt) << '\n';
    out << "total_time = " << g17(cfg.total_time) << '\n';
    out << "output_times =";
    for (std::size_t i = 0; i < cfg.output_times.size(); ++i)
        out << (i ? "," : " ") << g17(cfg.output_times[i]);
    out << '\n';
    out << "soil = " << cfg.soil_name << '\n';
    out << "theta_r = " << g17(cfg.soil.theta_r) << '\n';
    out << "theta_s = " << g17(cfg.soil.theta_s) << '\n';
    out << "theta_0 = " << g17(cfg.soil.theta_0) << '\n';
    out << "K_s = " << g17(cfg.soil.K_s) << '\n';
    out << "h_cap = " << g17(cfg.soil.h_cap) << '\n';
    out << "lambda = " << g17(cfg.soil.lambda) << '\n';
    out << "m = " << g17(cfg.soil.m) << '\n';
    out << "eps = " << g17(cfg.eps) << '\n';
    out << "n_s = " << cfg.n_s << '\n';
    out << "tol = " << g17(cfg.tol) << '\n';
    out << "max_picard = " << cfg.max_picard << '\n';
    out << "defaulted =";
    for (std::size_t i = 0; i < cfg.defaulted.size(); ++i)
        out << (i ? "," : " ") << cfg.defaulted[i];
    out << '\n';
}

void write_comparison(const std::vector<std::pair<double, ComparisonReport>>& rows,
                      const std::string& path) {
    std::ofstream out = open_out(path);
    out << "t,rmse,rel_l1,n_points,interpolated\n";
    for (const auto& [t, report] : rows)
        out << g17(t) << ',' << g17(report.rmse) << ',' << g17(report.rel_l1) << ','
            << report.n_points << ',' << (report.interpolated ? 1 : 0) << '\n';
}

void write_plot_script(const std::string& path) {
    std::ofstream out = open_out(path);
    out << R"(#!/usr/bin/env python3
"""Plot the profile and mass CSVs in this directory."""
import csv
import glob
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))

def read(path):
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    return {k: [float(r[k]) for r in rows] for k in rows[0]}

profiles = sorted(glob.glob(os.path.join(here, "profile_t*.csv")))
if profiles:
    fig, ax = plt.subplots()
    for path in profiles:
        data = read(path)
        label = os.path.basename(path)[len("profile_t"):-len(".csv")] + " min"
        if "x" in data:
            xs = sorted(set(data["x"]))
            mid = xs[len(xs) // 2]
            pick = [i for i, x in enumerate(data["x"]) if x == mid]
            ax.plot([data["theta"][i] for i in pick], [data["z"][i] for i in pick], label=label)
        else:
            ax.plot(data["theta"], data["z"], label=label)
    ax.invert_yaxis()
    ax.set_xlabel("moisture content")
    ax.set_ylabel("depth [cm]")
    ax.legend()
    fig.savefig(os.path.join(here, "profiles.png"), dpi=150)

mass = os.path.join(here, "mass.csv")
if os.path.exists(mass):
    data = read(mass)
    fig, ax = plt.subplots()
    ax.plot(data["t"], data["mass_per_unit_length"])
    ax.set_xlabel("time [min]")
    ax.set_ylabel("mass per unit length [cm]")
    fig.savefig(os.path.join(here, "mass.png"), dpi=150)
)";
}

}  // namespace richards
