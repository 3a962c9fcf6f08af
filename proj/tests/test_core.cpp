#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "wigner/core.hpp"

using namespace wigner;

TEST_CASE("well configuration accepts positive triples and rejects the rest") {
    const WellConfig paper = make_well_config(0.5, 1.0, 1.0);  // 2m = L = hbar = 1
    CHECK(paper.mass == 0.5);
    CHECK(paper.length == 1.0);
    const WellConfig other = make_well_config(1.0, 2.0, 1.0);
    CHECK(other.length == 2.0);

    CHECK_THROWS_AS(make_well_config(-1.0, 1.0, 1.0), ConfigError);
    CHECK_THROWS_AS(make_well_config(1.0, 0.0, 1.0), ConfigError);
    CHECK_THROWS_AS(make_well_config(1.0, 1.0, -2.0), ConfigError);
    CHECK_THROWS_AS(make_well_config(std::numeric_limits<double>::quiet_NaN(), 1.0, 1.0),
                    ConfigError);
    CHECK_THROWS_AS(make_well_config(std::numeric_limits<double>::infinity(), 1.0, 1.0),
                    ConfigError);
}

TEST_CASE("momentum quantum grows strictly with n") {
    const WellConfig well = make_well_config(1.0, 2.0, 1.0);
    double prev = 0.0;
    for (int n = 1; n <= 20; ++n) {
        const double pn = well.momentum_quantum(n);
        CHECK(pn > prev);
        prev = pn;
    }
    CHECK(well.momentum_quantum(3) == doctest::Approx(3.0 * std::numbers::pi / 2.0));
}

TEST_CASE("grid nodes are evenly spaced with exact endpoints") {
    const PhaseSpaceGrid tiny = make_grid(0.0, 1.0, 2, -1.0, 1.0, 2);
    const Eigen::VectorXd xs = tiny.x_nodes();
    const Eigen::VectorXd ps = tiny.p_nodes();
    CHECK(xs[0] == 0.0);
    CHECK(xs[1] == 1.0);
    CHECK(ps[0] == -1.0);
    CHECK(ps[1] == 1.0);

    const PhaseSpaceGrid g = make_grid(0.0, 1.0, 101, -150.0, 150.0, 301);
    CHECK(g.dx() == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(g.dp() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.x_nodes()[100] == 1.0);
    CHECK(g.p_nodes()[300] == 150.0);

    // endpoints pinned even when the step does not land exactly
    const Eigen::VectorXd odd = linspace_nodes(0.0, 0.3, 7);
    CHECK(odd[0] == 0.0);
    CHECK(odd[6] == 0.3);
}

TEST_CASE("grid construction validates bounds and counts") {
    CHECK_THROWS_AS(make_grid(1.0, 0.0, 10, -1.0, 1.0, 10), GridError);
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 1, -1.0, 1.0, 10), GridError);
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 10, 2.0, 1.0, 10), GridError);
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 10, -1.0, 1.0, 0), GridError);
}
