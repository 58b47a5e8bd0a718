#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "richards/constitutive.hpp"
#include "richards/pointset.hpp"
#include "richards/rbf_stencil.hpp"

namespace richards {

// Kirchhoff values imposed on the top and bottom Dirichlet rows.
struct BoundaryValues {
    double top = 0.0;
    double bottom = 0.0;
};

// Global collocation system M u = rhs for one Picard iteration.
struct SparseSystem {
    Eigen::SparseMatrix<double> matrix;
    Eigen::VectorXd rhs;
};

// Caches everything that survives across Picard iterations and time steps:
// per-stencil weight rows (the local factorizations are folded into them) and
// the sparsity structure. Only the A, B coefficients change per iteration.
class Assembler {
public:
    Assembler(const NodeSet& nodes, const std::vector<Stencil>& stencils, double eps);

    // Builds matrix values and right-hand side from the current Picard iterate's
    // suction state and the previous time level. Throws state_error on a
    // non-finite coefficient.
    void assemble(const SoilParams& soil, const std::vector<double>& state_h,
                  const Eigen::VectorXd& u_prev, double dt, const BoundaryValues& bc,
                  SparseSystem& out) const;

    SparseSystem assemble(const SoilParams& soil, const std::vector<double>& state_h,
                          const Eigen::VectorXd& u_prev, double dt,
                          const BoundaryValues& bc) const;

    // Largest local interpolation-matrix condition estimate over all stencils.
    double max_condition() const { return max_condition_; }

    const NodeSet& nodes() const { return *nodes_; }

private:
    const NodeSet* nodes_;
    std::vector<OperatorRows> rows_;
    std::vector<int> mirror_partner_;  // horizontal in-domain neighbor of each side node, else -1
    double max_condition_ = 0.0;
    Eigen::Index n_entries_ = 0;
    std::vector<int> trip_row_, trip_col_;
};

// Direct sparse solve with the residual contract
//   ||M u - rhs||_inf <= 1e-10 * (1 + ||rhs||_inf);
// one iterative-refinement pass is attempted before giving up.
// Reuses the symbolic analysis across calls with an unchanged pattern.
class LinearSolver {
public:
    Eigen::VectorXd solve(const SparseSystem& sys);

    double last_residual() const { return last_residual_; }
    double max_residual_ratio() const { return max_residual_ratio_; }

private:
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
    bool analyzed_ = false;
    double last_residual_ = 0.0;
    double max_residual_ratio_ = 0.0;  // residual / (1 + ||rhs||_inf), max over solves
};

// One-shot convenience wrapper around LinearSolver.
Eigen::VectorXd solve(const SparseSystem& sys);

// Coordinate-format text dump: one "row col value" line per stored entry.
void dump_matrix(const SparseSystem& sys, std::ostream& os);

}  // namespace richards
