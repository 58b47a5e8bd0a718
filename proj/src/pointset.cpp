#include "richards/pointset.hpp"

#include <algorithm>
#include <numeric>

#include "richards/errors.hpp"
#include "richards/parallel.hpp"

namespace richards {

std::size_t NodeSet::interior_count() const {
    return static_cast<std::size_t>(
        std::count(kind.begin(), kind.end(), NodeKind::interior));
}

NodeSet grid_1d(double L, int n_z) {
    if (n_z < 3) throw config_error("grid_1d: need at least 3 nodes");
    if (!(L > 0.0)) throw config_error("grid_1d: depth must be positive");
    NodeSet nodes;
    nodes.dim = 1;
    nodes.nx = 1;
    nodes.nz = n_z;
    nodes.lz = L;
    nodes.x.assign(n_z, 0.0);
    nodes.z.resize(n_z);
    nodes.kind.resize(n_z);
    for (int j = 0; j < n_z; ++j) {
        nodes.z[j] = static_cast<double>(j) * L / (n_z - 1);
        nodes.kind[j] = j == 0           ? NodeKind::dirichlet_top
                        : j == n_z - 1   ? NodeKind::dirichlet_bottom
                                         : NodeKind::interior;
    }
    return nodes;
}

NodeSet grid_2d(double l, double L, int n_x, int n_z) {
    if (n_x < 3 || n_z < 3) throw config_error("grid_2d: need at least 3 nodes per direction");
    if (!(l > 0.0) || !(L > 0.0)) throw config_error("grid_2d: extents must be positive");
    NodeSet nodes;
    nodes.dim = 2;
    nodes.nx = n_x;
    nodes.nz = n_z;
    nodes.lx = l;
    nodes.lz = L;
    const std::size_t n = static_cast<std::size_t>(n_x) * n_z;
    nodes.x.resize(n);
    nodes.z.resize(n);
    nodes.kind.resize(n);
    for (int j = 0; j < n_z; ++j) {
        for (int i = 0; i < n_x; ++i) {
            const std::size_t s = static_cast<std::size_t>(j) * n_x + i;
            nodes.x[s] = static_cast<double>(i) * l / (n_x - 1);
            nodes.z[s] = static_cast<double>(j) * L / (n_z - 1);
            if (j == 0)
                nodes.kind[s] = NodeKind::dirichlet_top;
            else if (j == n_z - 1)
                nodes.kind[s] = NodeKind::dirichlet_bottom;
            else if (i == 0 || i == n_x - 1)
                nodes.kind[s] = NodeKind::neumann_side;
            else
                nodes.kind[s] = NodeKind::interior;
        }
    }
    return nodes;
}

std::vector<Stencil> build_stencils(const NodeSet& nodes, int n_s) {
    const std::size_t n = nodes.size();
    if (n_s < 2) throw config_error("build_stencils: stencil size must be at least 2");
    if (static_cast<std::size_t>(n_s) > n)
        throw config_error("build_stencils: stencil size exceeds node count");

    std::vector<Stencil> stencils(n);
    parallel_chunks(n, [&](std::size_t lo, std::size_t hi) {
        std::vector<double> d2(n);
        std::vector<int> order(n);
        for (std::size_t s = lo; s < hi; ++s) {
            for (std::size_t k = 0; k < n; ++k) {
                const double dx = nodes.x[k] - nodes.x[s];
                const double dz = nodes.z[k] - nodes.z[s];
                d2[k] = dx * dx + dz * dz;
            }
            std::iota(order.begin(), order.end(), 0);
            auto closer = [&](int a, int b) {
                return d2[a] < d2[b] || (d2[a] == d2[b] && a < b);
            };
            std::nth_element(order.begin(), order.begin() + n_s, order.end(), closer);
            std::sort(order.begin(), order.begin() + n_s, closer);

            Stencil& st = stencils[s];
            st.center = static_cast<int>(s);
            st.neighbors.reserve(n_s);
            st.neighbors.push_back(st.center);
            for (int k = 0; k < n_s && st.neighbors.size() < static_cast<std::size_t>(n_s); ++k)
                if (order[k] != st.center) st.neighbors.push_back(order[k]);
        }
    });
    return stencils;
}

}  // namespace richards
