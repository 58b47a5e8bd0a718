#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "richards/metrics.hpp"
#include "richards/pointset.hpp"

using namespace richards;

TEST_CASE("rmse") {
    const std::vector<double> a = {0.0, 0.0};
    const std::vector<double> b = {3.0, 4.0};
    CHECK(rmse(a, b) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));
    CHECK(rmse(b, b) == 0.0);
    CHECK_THROWS_AS(rmse(a, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("relative l1") {
    const std::vector<double> sample = {1.0, 2.0, 3.0};
    const std::vector<double> ref = {1.0, 1.0, 2.0};
    CHECK(rel_l1(sample, ref) == doctest::Approx(2.0 / 4.0).epsilon(1e-15));
    CHECK(rel_l1(ref, ref) == 0.0);
    // scale equivariance: scaling both vectors leaves the metric unchanged
    const std::vector<double> s10 = {10.0, 20.0, 30.0};
    const std::vector<double> r10 = {10.0, 10.0, 20.0};
    CHECK(rel_l1(s10, r10) == doctest::Approx(rel_l1(sample, ref)).epsilon(1e-15));
    CHECK_THROWS_AS(rel_l1(sample, std::vector<double>{0.0, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("total mass in 1D: trapezoid values and linear exactness") {
    const NodeSet nodes = grid_1d(2.0, 3);
    // trapezoid of {0.1, 0.2, 0.3} with dz = 1
    CHECK(total_mass(std::vector<double>{0.1, 0.2, 0.3}, nodes) ==
          doctest::Approx(0.4).epsilon(1e-15));

    // uniform theta integrates to theta * L at any resolution
    const NodeSet fine = grid_1d(100.0, 201);
    CHECK(total_mass(std::vector<double>(201, 0.121), fine) ==
          doctest::Approx(12.1).epsilon(1e-13));

    // trapezoid is exact on linear profiles
    std::vector<double> lin(201);
    for (int i = 0; i < 201; ++i) lin[i] = 0.1 + 0.002 * fine.z[i];
    CHECK(total_mass(lin, fine) == doctest::Approx(0.1 * 100.0 + 0.001 * 100.0 * 100.0).epsilon(1e-13));
}

TEST_CASE("total mass in 2D: x-uniform field matches the 1D column") {
    const NodeSet col = grid_1d(50.0, 41);
    const NodeSet sheet = grid_2d(30.0, 50.0, 13, 41);
    std::vector<double> theta1(41), theta2(13 * 41);
    for (int j = 0; j < 41; ++j) {
        theta1[j] = 0.109 + 0.004 * std::sin(0.1 * col.z[j]);
        for (int i = 0; i < 13; ++i) theta2[static_cast<std::size_t>(j) * 13 + i] = theta1[j];
    }
    CHECK(total_mass(theta2, sheet) == doctest::Approx(total_mass(theta1, col)).epsilon(1e-9));
}

TEST_CASE("linear regrid") {
    const std::vector<double> z = {0.0, 1.0, 3.0};
    const std::vector<double> v = {10.0, 20.0, 0.0};
    const std::vector<double> targets = {0.0, 0.5, 2.0, 3.0};
    const std::vector<double> got = regrid_linear(z, v, targets);
    REQUIRE(got.size() == 4);
    CHECK(got[0] == doctest::Approx(10.0));
    CHECK(got[1] == doctest::Approx(15.0));
    CHECK(got[2] == doctest::Approx(10.0));
    CHECK(got[3] == doctest::Approx(0.0));

    CHECK_THROWS_AS(regrid_linear(z, v, std::vector<double>{-0.01}), std::domain_error);
    CHECK_THROWS_AS(regrid_linear(z, v, std::vector<double>{3.01}), std::domain_error);
    CHECK_THROWS_AS(regrid_linear(std::vector<double>{0.0, 0.0}, std::vector<double>{1.0, 2.0},
                                  targets),
                    std::invalid_argument);
}

TEST_CASE("profile comparison regrids only when the grids differ") {
    const std::vector<double> z = {0.0, 1.0, 2.0};
    const std::vector<double> sample = {1.0, 2.0, 3.0};
    const std::vector<double> ref = {1.0, 2.0, 4.0};

    const ComparisonReport same = compare_profiles(z, sample, z, ref);
    CHECK_FALSE(same.interpolated);
    CHECK(same.n_points == 3);
    CHECK(same.rmse == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-15));
    CHECK(same.rel_l1 == doctest::Approx(1.0 / 7.0).epsilon(1e-15));

    // reference on a finer grid, linear in z: interpolation is exact
    const std::vector<double> z_fine = {0.0, 0.5, 1.0, 1.5, 2.0};
    const std::vector<double> ref_fine = {1.0, 1.5, 2.0, 3.0, 4.0};
    const ComparisonReport interp = compare_profiles(z, sample, z_fine, ref_fine);
    CHECK(interp.interpolated);
    CHECK(interp.n_points == 3);
    CHECK(interp.rmse == doctest::Approx(same.rmse).epsilon(1e-14));
}
