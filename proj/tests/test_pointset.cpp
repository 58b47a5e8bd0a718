#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "richards/errors.hpp"
#include "richards/pointset.hpp"

using namespace richards;

namespace {

// Brute-force k-nearest reference: full distance sort with the same tie rule.
std::vector<int> knn_reference(const NodeSet& nodes, int center, int k) {
    std::vector<int> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> d2(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double dx = nodes.x[i] - nodes.x[center];
        const double dz = nodes.z[i] - nodes.z[center];
        d2[i] = dx * dx + dz * dz;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return d2[a] < d2[b] || (d2[a] == d2[b] && a < b);
    });
    order.resize(k);
    return order;
}

}  // namespace

TEST_CASE("1D grid layout") {
    const NodeSet nodes = grid_1d(100.0, 3);
    REQUIRE(nodes.size() == 3);
    CHECK(nodes.z == std::vector<double>{0.0, 50.0, 100.0});
    CHECK(nodes.kind[0] == NodeKind::dirichlet_top);
    CHECK(nodes.kind[1] == NodeKind::interior);
    CHECK(nodes.kind[2] == NodeKind::dirichlet_bottom);

    const NodeSet fine = grid_1d(100.0, 201);
    CHECK(fine.z[1] - fine.z[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(fine.interior_count() == 199);

    CHECK_THROWS_AS(grid_1d(100.0, 2), config_error);
    CHECK_THROWS_AS(grid_1d(-1.0, 10), config_error);
}

TEST_CASE("2D grid layout and tags") {
    const NodeSet tiny = grid_2d(100.0, 100.0, 3, 3);
    REQUIRE(tiny.size() == 9);
    CHECK(tiny.interior_count() == 1);
    // corners belong to the Dirichlet rows
    CHECK(tiny.kind[0] == NodeKind::dirichlet_top);
    CHECK(tiny.kind[2] == NodeKind::dirichlet_top);
    CHECK(tiny.kind[6] == NodeKind::dirichlet_bottom);
    CHECK(tiny.kind[8] == NodeKind::dirichlet_bottom);
    CHECK(tiny.kind[3] == NodeKind::neumann_side);
    CHECK(tiny.kind[5] == NodeKind::neumann_side);
    CHECK(tiny.kind[4] == NodeKind::interior);

    // node (i, j) lives at index j*nx + i
    const NodeSet grid = grid_2d(50.0, 100.0, 5, 7);
    for (int j = 0; j < 7; ++j)
        for (int i = 0; i < 5; ++i) {
            const std::size_t s = static_cast<std::size_t>(j) * 5 + i;
            CHECK(grid.x[s] == doctest::Approx(i * 50.0 / 4).epsilon(1e-15));
            CHECK(grid.z[s] == doctest::Approx(j * 100.0 / 6).epsilon(1e-15));
        }

    const NodeSet big = grid_2d(100.0, 100.0, 200, 200);
    CHECK(big.size() == 40000);
    CHECK(big.interior_count() == 39204);  // (n_x-2)*(n_z-2)

    CHECK_THROWS_AS(grid_2d(100.0, 100.0, 2, 5), config_error);
}

TEST_CASE("no duplicate nodes, tags partition") {
    const NodeSet nodes = grid_2d(10.0, 10.0, 11, 11);
    std::set<std::pair<double, double>> seen;
    for (std::size_t s = 0; s < nodes.size(); ++s)
        CHECK(seen.emplace(nodes.x[s], nodes.z[s]).second);
    std::size_t tagged = nodes.interior_count();
    for (NodeKind k :
         {NodeKind::dirichlet_top, NodeKind::dirichlet_bottom, NodeKind::neumann_side})
        tagged += std::count(nodes.kind.begin(), nodes.kind.end(), k);
    CHECK(tagged == nodes.size());
}

TEST_CASE("1D stencils are the symmetric neighbor triples") {
    const NodeSet nodes = grid_1d(100.0, 21);
    const auto stencils = build_stencils(nodes, 3);
    REQUIRE(stencils.size() == nodes.size());
    for (int j = 1; j < 20; ++j) {
        const auto& nb = stencils[j].neighbors;
        REQUIRE(nb.size() == 3);
        CHECK(nb[0] == j);
        CHECK(std::set<int>(nb.begin(), nb.end()) == std::set<int>{j - 1, j, j + 1});
    }
    // endpoint stencils lean inward
    CHECK(std::set<int>(stencils[0].neighbors.begin(), stencils[0].neighbors.end()) ==
          std::set<int>{0, 1, 2});
}

TEST_CASE("2D interior stencil is the five-point star") {
    const NodeSet nodes = grid_2d(100.0, 100.0, 11, 11);
    const auto stencils = build_stencils(nodes, 5);
    const int s = 5 * 11 + 5;  // middle node
    const auto& nb = stencils[s].neighbors;
    CHECK(nb[0] == s);
    CHECK(std::set<int>(nb.begin(), nb.end()) ==
          std::set<int>{s, s - 1, s + 1, s - 11, s + 11});
}

TEST_CASE("stencils match the brute-force reference") {
    for (int n_s : {3, 4, 5, 6}) {
        const NodeSet line = grid_1d(37.0, 37);
        for (const Stencil& st : build_stencils(line, n_s)) {
            auto ref = knn_reference(line, st.center, n_s);
            auto got = st.neighbors;
            std::sort(ref.begin(), ref.end());
            std::sort(got.begin(), got.end());
            CHECK(got == ref);
        }
    }
    const NodeSet rect = grid_2d(14.0, 8.0, 15, 9);
    for (const Stencil& st : build_stencils(rect, 5)) {
        auto ref = knn_reference(rect, st.center, 5);
        auto got = st.neighbors;
        CHECK(got[0] == st.center);
        std::sort(ref.begin(), ref.end());
        std::sort(got.begin(), got.end());
        CHECK(got == ref);
    }
}

TEST_CASE("corner stencil stays in-domain") {
    const NodeSet nodes = grid_2d(100.0, 100.0, 11, 11);
    const auto stencils = build_stencils(nodes, 5);
    const auto& nb = stencils[0].neighbors;  // top-left corner
    CHECK(nb[0] == 0);
    const auto ref = knn_reference(nodes, 0, 5);
    CHECK(std::set<int>(nb.begin(), nb.end()) == std::set<int>(ref.begin(), ref.end()));
}

TEST_CASE("stencil construction is deterministic") {
    const NodeSet nodes = grid_2d(9.0, 9.0, 10, 10);
    const auto a = build_stencils(nodes, 5);
    const auto b = build_stencils(nodes, 5);
    REQUIRE(a.size() == b.size());
    for (std::size_t s = 0; s < a.size(); ++s) CHECK(a[s].neighbors == b[s].neighbors);
}

TEST_CASE("stencil size bounds") {
    const NodeSet nodes = grid_1d(10.0, 5);
    CHECK_THROWS_AS(build_stencils(nodes, 1), config_error);
    CHECK_THROWS_AS(build_stencils(nodes, 6), config_error);
    CHECK_NOTHROW(build_stencils(nodes, 5));
}
