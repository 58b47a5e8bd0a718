#include "richards/system.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "richards/errors.hpp"
#include "richards/parallel.hpp"

namespace richards {

Assembler::Assembler(const NodeSet& nodes, const std::vector<Stencil>& stencils, double eps)
    : nodes_(&nodes), rows_(nodes.size()), mirror_partner_(nodes.size(), -1) {
    const std::size_t n = nodes.size();
    if (stencils.size() != n) throw config_error("assembler: one stencil per node required");

    parallel_chunks(n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) rows_[s] = operator_rows(stencils[s], nodes, eps);
    });
    for (const auto& r : rows_) max_condition_ = std::max(max_condition_, r.condition);

    // No-flux sides close the system with the reflection row u(edge) = u(inward
    // neighbor), which preserves x-invariant states exactly on the tensor grid.
    for (std::size_t s = 0; s < n; ++s) {
        if (nodes.kind[s] != NodeKind::neumann_side) continue;
        const int i = static_cast<int>(s) % nodes.nx;
        const int partner = static_cast<int>(s) + (i == 0 ? 1 : -1);
        mirror_partner_[s] = partner;
    }

    for (std::size_t s = 0; s < n; ++s) {
        if (mirror_partner_[s] >= 0) {
            trip_row_.push_back(static_cast<int>(s));
            trip_col_.push_back(static_cast<int>(s));
            trip_row_.push_back(static_cast<int>(s));
            trip_col_.push_back(mirror_partner_[s]);
        } else {
            for (int idx : rows_[s].indices) {
                trip_row_.push_back(static_cast<int>(s));
                trip_col_.push_back(idx);
            }
        }
    }
    n_entries_ = static_cast<Eigen::Index>(trip_row_.size());
}

void Assembler::assemble(const SoilParams& soil, const std::vector<double>& state_h,
                         const Eigen::VectorXd& u_prev, double dt, const BoundaryValues& bc,
                         SparseSystem& out) const {
    const std::size_t n = nodes_->size();
    if (state_h.size() != n || static_cast<std::size_t>(u_prev.size()) != n)
        throw config_error("assemble: state size mismatch");
    if (!(dt > 0.0)) throw config_error("assemble: dt must be positive");

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(n_entries_);
    out.rhs.resize(static_cast<Eigen::Index>(n));

    std::size_t e = 0;
    for (std::size_t s = 0; s < n; ++s) {
        const NodeKind kind = nodes_->kind[s];
        if (mirror_partner_[s] >= 0) {
            trips.emplace_back(trip_row_[e], trip_col_[e], 1.0);
            ++e;
            trips.emplace_back(trip_row_[e], trip_col_[e], -1.0);
            ++e;
            out.rhs(static_cast<Eigen::Index>(s)) = 0.0;
            continue;
        }
        const OperatorRows& r = rows_[s];
        const std::size_t ns = r.indices.size();
        if (kind == NodeKind::dirichlet_top || kind == NodeKind::dirichlet_bottom) {
            for (std::size_t k = 0; k < ns; ++k) {
                trips.emplace_back(trip_row_[e], trip_col_[e], r.value[k]);
                ++e;
            }
            out.rhs(static_cast<Eigen::Index>(s)) =
                kind == NodeKind::dirichlet_top ? bc.top : bc.bottom;
            continue;
        }
        const KirchhoffCoefficients coef = coefficients(state_h[s], soil);
        if (!std::isfinite(coef.A) || !std::isfinite(coef.B))
            throw state_error("non-finite linearization coefficient at node " + std::to_string(s),
                              static_cast<long>(s));
        const double a = coef.A / dt;
        for (std::size_t k = 0; k < ns; ++k) {
            trips.emplace_back(trip_row_[e], trip_col_[e],
                               a * r.value[k] - r.laplacian[k] - coef.B * r.dz[k]);
            ++e;
        }
        out.rhs(static_cast<Eigen::Index>(s)) = a * u_prev(static_cast<Eigen::Index>(s));
    }

    out.matrix.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    out.matrix.setFromTriplets(trips.begin(), trips.end());
    out.matrix.makeCompressed();
}

SparseSystem Assembler::assemble(const SoilParams& soil, const std::vector<double>& state_h,
                                 const Eigen::VectorXd& u_prev, double dt,
                                 const BoundaryValues& bc) const {
    SparseSystem sys;
    assemble(soil, state_h, u_prev, dt, bc, sys);
    return sys;
}

Eigen::VectorXd LinearSolver::solve(const SparseSystem& sys) {
    if (!analyzed_) {
        lu_.analyzePattern(sys.matrix);
        analyzed_ = true;
    }
    lu_.factorize(sys.matrix);
    if (lu_.info() != Eigen::Success) {
        analyzed_ = false;
        throw solver_error("sparse factorization failed", std::numeric_limits<double>::infinity());
    }
    Eigen::VectorXd u = lu_.solve(sys.rhs);
    const double tol = 1e-10 * (1.0 + sys.rhs.lpNorm<Eigen::Infinity>());
    Eigen::VectorXd r = sys.rhs - sys.matrix * u;
    double res = r.lpNorm<Eigen::Infinity>();
    if (!(res <= tol)) {
        u += lu_.solve(r);
        r = sys.rhs - sys.matrix * u;
        res = r.lpNorm<Eigen::Infinity>();
    }
    last_residual_ = res;
    max_residual_ratio_ =
        std::max(max_residual_ratio_, res / (1.0 + sys.rhs.lpNorm<Eigen::Infinity>()));
    if (!(res <= tol))
        throw solver_error("linear solve residual " + std::to_string(res) + " exceeds bound " +
                               std::to_string(tol),
                           res);
    return u;
}

Eigen::VectorXd solve(const SparseSystem& sys) {
    LinearSolver solver;
    return solver.solve(sys);
}

void dump_matrix(const SparseSystem& sys, std::ostream& os) {
    char buf[64];
    for (int k = 0; k < sys.matrix.outerSize(); ++k) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(sys.matrix, k); it; ++it) {
            std::snprintf(buf, sizeof buf, "%ld %ld %.17g\n", static_cast<long>(it.row()),
                          static_cast<long>(it.col()), it.value());
            os << buf;
        }
    }
}

}  // namespace richards
