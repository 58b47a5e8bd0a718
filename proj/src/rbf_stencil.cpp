#include "richards/rbf_stencil.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "richards/errors.hpp"

namespace richards {

namespace {
constexpr double kConditionLimit = 1e12;

double dist(const NodeSet& nodes, int a, int b) {
    const double dx = nodes.x[a] - nodes.x[b];
    const double dz = nodes.z[a] - nodes.z[b];
    return std::sqrt(dx * dx + dz * dz);
}

Eigen::MatrixXd build_phi(const Stencil& stencil, const NodeSet& nodes, double eps) {
    const int n = static_cast<int>(stencil.neighbors.size());
    Eigen::MatrixXd phi(n, n);
    for (int i = 0; i < n; ++i) {
        phi(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double v = mq(dist(nodes, stencil.neighbors[i], stencil.neighbors[j]), eps);
            phi(i, j) = v;
            phi(j, i) = v;
        }
    }
    return phi;
}

Eigen::VectorXd solve_weights(const Eigen::MatrixXd& phi, const Eigen::VectorXd& psi) {
    // phi is symmetric, so the transposed system coincides with the direct one.
    return phi.partialPivLu().solve(psi);
}
}  // namespace

double mq(double r, double eps) {
    const double t = eps * r;
    return std::sqrt(1.0 + t * t);
}

double mq_dz(double x, double z, double xk, double zk, double eps) {
    const double dx = x - xk;
    const double dz = z - zk;
    const double r = std::sqrt(dx * dx + dz * dz);
    return eps * eps * dz / mq(r, eps);
}

double mq_laplacian(double x, double z, double xk, double zk, double eps, int dim) {
    if (dim != 1 && dim != 2) throw config_error("mq_laplacian: dim must be 1 or 2");
    const double dx = x - xk;
    const double dz = z - zk;
    const double r2 = dx * dx + dz * dz;
    const double t = 1.0 + eps * eps * r2;
    const double t32 = t * std::sqrt(t);
    if (dim == 1) return eps * eps / t32;
    return eps * eps * (2.0 + eps * eps * r2) / t32;
}

double condition_estimate(const Eigen::MatrixXd& phi) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(phi);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

Eigen::MatrixXd local_matrix(const Stencil& stencil, const NodeSet& nodes, double eps) {
    Eigen::MatrixXd phi = build_phi(stencil, nodes, eps);
    const double cond = condition_estimate(phi);
    if (!(cond < kConditionLimit))
        throw ill_conditioned_error(
            "local interpolation matrix near-singular at node " + std::to_string(stencil.center),
            cond);
    return phi;
}

WeightRow interior_row(const Stencil& stencil, const NodeSet& nodes, double eps,
                       double A_s, double B_s, double dt) {
    if (!(dt > 0.0)) throw config_error("interior_row: dt must be positive");
    const Eigen::MatrixXd phi = local_matrix(stencil, nodes, eps);
    const int n = static_cast<int>(stencil.neighbors.size());
    const int s = stencil.center;
    Eigen::VectorXd psi(n);
    for (int k = 0; k < n; ++k) {
        const int gk = stencil.neighbors[k];
        psi(k) = (A_s / dt) * mq(dist(nodes, s, gk), eps) -
                 mq_laplacian(nodes.x[s], nodes.z[s], nodes.x[gk], nodes.z[gk], eps, nodes.dim) -
                 B_s * mq_dz(nodes.x[s], nodes.z[s], nodes.x[gk], nodes.z[gk], eps);
    }
    const Eigen::VectorXd w = solve_weights(phi, psi);
    WeightRow row;
    row.indices = stencil.neighbors;
    row.weights.assign(w.data(), w.data() + n);
    return row;
}

WeightRow boundary_row(const Stencil& stencil, const NodeSet& nodes, double eps,
                       BoundaryKind kind, std::array<double, 2> normal) {
    const Eigen::MatrixXd phi = local_matrix(stencil, nodes, eps);
    const int n = static_cast<int>(stencil.neighbors.size());
    const int s = stencil.center;
    Eigen::VectorXd psi(n);
    for (int k = 0; k < n; ++k) {
        const int gk = stencil.neighbors[k];
        if (kind == BoundaryKind::dirichlet) {
            psi(k) = mq(dist(nodes, s, gk), eps);
        } else {
            const double dx = nodes.x[s] - nodes.x[gk];
            const double dz = nodes.z[s] - nodes.z[gk];
            const double r = std::sqrt(dx * dx + dz * dz);
            const double scale = eps * eps / mq(r, eps);
            psi(k) = normal[0] * scale * dx + normal[1] * scale * dz;
        }
    }
    const Eigen::VectorXd w = solve_weights(phi, psi);
    WeightRow row;
    row.indices = stencil.neighbors;
    row.weights.assign(w.data(), w.data() + n);
    return row;
}

OperatorRows operator_rows(const Stencil& stencil, const NodeSet& nodes, double eps) {
    const Eigen::MatrixXd phi = build_phi(stencil, nodes, eps);
    const double cond = condition_estimate(phi);
    if (!(cond < kConditionLimit))
        throw ill_conditioned_error(
            "local interpolation matrix near-singular at node " + std::to_string(stencil.center),
            cond);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu = phi.partialPivLu();
    const int n = static_cast<int>(stencil.neighbors.size());
    const int s = stencil.center;
    Eigen::VectorXd val(n), lap(n), dz(n);
    for (int k = 0; k < n; ++k) {
        const int gk = stencil.neighbors[k];
        val(k) = mq(dist(nodes, s, gk), eps);
        lap(k) = mq_laplacian(nodes.x[s], nodes.z[s], nodes.x[gk], nodes.z[gk], eps, nodes.dim);
        dz(k) = mq_dz(nodes.x[s], nodes.z[s], nodes.x[gk], nodes.z[gk], eps);
    }
    OperatorRows rows;
    rows.indices = stencil.neighbors;
    rows.condition = cond;
    const Eigen::VectorXd wv = lu.solve(val);
    const Eigen::VectorXd wl = lu.solve(lap);
    const Eigen::VectorXd wd = lu.solve(dz);
    rows.value.assign(wv.data(), wv.data() + n);
    rows.laplacian.assign(wl.data(), wl.data() + n);
    rows.dz.assign(wd.data(), wd.data() + n);
    return rows;
}

}  // namespace richards
