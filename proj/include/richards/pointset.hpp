#pragma once

#include <cstddef>
#include <vector>

namespace richards {

enum class NodeKind { interior, dirichlet_top, dirichlet_bottom, neumann_side };

// Tensor-grid collocation node set for a 1D column or a 2D rectangle.
// 2D ordering is row-major with x fastest: node (i, j) has index j * nx + i.
struct NodeSet {
    int dim = 1;        // 1 or 2
    int nx = 1, nz = 0; // nx stays 1 in 1D
    double lx = 0.0;    // width [cm], 0 in 1D
    double lz = 0.0;    // depth [cm]
    std::vector<double> x, z;
    std::vector<NodeKind> kind;

    std::size_t size() const { return z.size(); }
    std::size_t interior_count() const;
};

// Uniform nodes on [0, L]; z=0 is dirichlet_top, z=L dirichlet_bottom.
NodeSet grid_1d(double L, int n_z);

// Uniform tensor grid on [0, l] x [0, L]. Top/bottom rows are Dirichlet
// (corners included; Dirichlet data dominates the sides), x=0 and x=l are
// neumann_side.
NodeSet grid_2d(double l, double L, int n_x, int n_z);

// The n_s nearest nodes to `center` under Euclidean distance, center listed
// first; distance ties broken by lower node index.
struct Stencil {
    int center = 0;
    std::vector<int> neighbors;
};

std::vector<Stencil> build_stencils(const NodeSet& nodes, int n_s);

}  // namespace richards
