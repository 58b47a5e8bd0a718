#include "richards/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "richards/errors.hpp"

namespace richards {

double rmse(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("rmse: need equal nonzero lengths");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(a.size()));
}

double rel_l1(std::span<const double> a, std::span<const double> b_ref) {
    if (a.size() != b_ref.size() || a.empty())
        throw std::invalid_argument("rel_l1: need equal nonzero lengths");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::abs(a[i] - b_ref[i]);
        den += std::abs(b_ref[i]);
    }
    if (den == 0.0) throw std::domain_error("rel_l1: zero reference norm");
    return num / den;
}

double total_mass(std::span<const double> theta, const NodeSet& nodes) {
    if (theta.size() != nodes.size())
        throw std::invalid_argument("total_mass: field size does not match node set");
    if (nodes.nz < 2 || static_cast<std::size_t>(nodes.nx) * nodes.nz != nodes.size())
        throw std::invalid_argument("total_mass: tensor grid required");

    const double dz = nodes.lz / (nodes.nz - 1);
    if (nodes.dim == 1) {
        double acc = 0.0;
        for (int j = 0; j + 1 < nodes.nz; ++j) acc += 0.5 * (theta[j] + theta[j + 1]) * dz;
        return acc;
    }
    const double dx = nodes.lx / (nodes.nx - 1);
    // trapezoid in x per depth row, then trapezoid in z, then per unit width
    std::vector<double> row(nodes.nz, 0.0);
    for (int j = 0; j < nodes.nz; ++j) {
        const std::size_t base = static_cast<std::size_t>(j) * nodes.nx;
        double acc = 0.0;
        for (int i = 0; i + 1 < nodes.nx; ++i)
            acc += 0.5 * (theta[base + i] + theta[base + i + 1]) * dx;
        row[j] = acc;
    }
    double acc = 0.0;
    for (int j = 0; j + 1 < nodes.nz; ++j) acc += 0.5 * (row[j] + row[j + 1]) * dz;
    return acc / nodes.lx;
}

std::vector<double> regrid_linear(std::span<const double> z, std::span<const double> values,
                                  std::span<const double> targets) {
    if (z.size() != values.size() || z.size() < 2)
        throw std::invalid_argument("regrid_linear: need matching samples, at least 2");
    for (std::size_t i = 1; i < z.size(); ++i)
        if (!(z[i] > z[i - 1]))
            throw std::invalid_argument("regrid_linear: sample grid must strictly increase");

    std::vector<double> out;
    out.reserve(targets.size());
    for (double t : targets) {
        if (t < z.front() || t > z.back())
            throw std::domain_error("regrid_linear: target outside sampled range");
        const auto hi = std::lower_bound(z.begin(), z.end(), t);
        if (hi == z.begin()) {
            out.push_back(values.front());
            continue;
        }
        const std::size_t i1 = static_cast<std::size_t>(hi - z.begin());
        if (i1 == z.size() || z[i1] == t) {
            out.push_back(values[i1 == z.size() ? i1 - 1 : i1]);
            continue;
        }
        const std::size_t i0 = i1 - 1;
        const double w = (t - z[i0]) / (z[i1] - z[i0]);
        out.push_back((1.0 - w) * values[i0] + w * values[i1]);
    }
    return out;
}

ComparisonReport compare_profiles(std::span<const double> z_sample, std::span<const double> sample,
                                  std::span<const double> z_ref, std::span<const double> ref) {
    ComparisonReport report;
    report.n_points = sample.size();
    const bool same_grid = z_sample.size() == z_ref.size() &&
                           std::equal(z_sample.begin(), z_sample.end(), z_ref.begin());
    if (same_grid) {
        report.rmse = rmse(sample, ref);
        report.rel_l1 = rel_l1(sample, ref);
        return report;
    }
    report.interpolated = true;
    const std::vector<double> regridded = regrid_linear(z_ref, ref, z_sample);
    report.rmse = rmse(sample, regridded);
    report.rel_l1 = rel_l1(sample, regridded);
    return report;
}

}  // namespace richards
