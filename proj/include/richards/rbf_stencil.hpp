#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "richards/pointset.hpp"

namespace richards {

// Multiquadric kernel sqrt(1 + (eps*r)^2) and the derivatives the collocation
// operator needs. eps is the shape parameter [1/cm].

double mq(double r, double eps);

// d/dz of the kernel centered at (xk, zk), evaluated at (x, z).
double mq_dz(double x, double z, double xk, double zk, double eps);

// Laplacian of the kernel centered at (xk, zk), evaluated at (x, z).
// dim selects the 1D or 2D closed form.
double mq_laplacian(double x, double z, double xk, double zk, double eps, int dim);

// Symmetric n_s x n_s interpolation matrix of the stencil. Throws
// ill_conditioned_error when the condition estimate exceeds 1e12.
Eigen::MatrixXd local_matrix(const Stencil& stencil, const NodeSet& nodes, double eps);

// Condition estimate of an already-built local matrix (largest/smallest singular value).
double condition_estimate(const Eigen::MatrixXd& phi);

// One sparse row of the global collocation system: weights against the global
// indices of the generating stencil.
struct WeightRow {
    std::vector<int> indices;
    std::vector<double> weights;
};

// Row enforcing L u = f at the stencil center for the Picard-linearized operator
//   L = A_s/dt - lap - B_s * d/dz.
WeightRow interior_row(const Stencil& stencil, const NodeSet& nodes, double eps,
                       double A_s, double B_s, double dt);

enum class BoundaryKind { dirichlet, neumann };

// Boundary collocation row at the stencil center. Dirichlet rows come out
// cardinal (1 at the center, 0 elsewhere). Neumann rows apply n . grad through
// the local interpolant; both are exact on the kernel basis.
WeightRow boundary_row(const Stencil& stencil, const NodeSet& nodes, double eps,
                       BoundaryKind kind, std::array<double, 2> normal = {0.0, 0.0});

// Precomputed value/Laplacian/d_z weight rows of one stencil. The interior row
// for any (A_s, B_s, dt) is the combination (A_s/dt)*value - laplacian - B_s*dz,
// so these are built once per geometry and reused across all Picard iterations.
struct OperatorRows {
    std::vector<int> indices;
    std::vector<double> value, laplacian, dz;
    double condition = 0.0;
};

OperatorRows operator_rows(const Stencil& stencil, const NodeSet& nodes, double eps);

}  // namespace richards
