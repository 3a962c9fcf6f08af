#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "wigner/numeric.hpp"
#include "wigner/oracle.hpp"
#include "wigner/wigner_analytic.hpp"

using namespace wigner;

namespace {

constexpr double kPi = std::numbers::pi;

// Free-particle Gaussian in both representations, the analytic anchor the
// quadrature routes are validated against before any closed form is
// trusted.
struct GaussianState {
    double x0, p0, alpha, mass, hbar;

    double beta() const { return hbar * alpha; }
    double t0() const { return mass * hbar * alpha * alpha; }

    Complex psi(double x, double t) const {
        const Complex drift{1.0, t / t0()};
        const Complex pref = 1.0 / std::sqrt(std::sqrt(kPi) * alpha * hbar * drift);
        const double dx = x - x0 - p0 * t / mass;
        const Complex gauss = std::exp(-dx * dx / (2.0 * beta() * beta() * drift));
        const double phase = p0 * (x - x0) / hbar - p0 * p0 * t / (2.0 * mass * hbar);
        return pref * gauss * Complex{std::cos(phase), std::sin(phase)};
    }

    Complex phi(double p, double t) const {
        const double envelope =
            std::sqrt(alpha / std::sqrt(kPi)) * std::exp(-alpha * alpha * (p - p0) * (p - p0) / 2.0);
        const double phase = -p * x0 / hbar - p * p * t / (2.0 * mass * hbar);
        return envelope * Complex{std::cos(phase), std::sin(phase)};
    }

    double wigner(double x, double p, double t) const {
        const double dp = p - p0;
        const double dx = (x - x0 - p * t / mass) / beta();
        return std::exp(-alpha * alpha * dp * dp) * std::exp(-dx * dx) / (kPi * hbar);
    }
};

}  // namespace

TEST_CASE("simpson integrates low-order polynomials exactly") {
    const auto cubic = [](double x) { return 1.0 + x * (2.0 + x * (3.0 + 4.0 * x)); };
    // exact antiderivative over [0, 2]: 2 + 4 + 8 + 16
    CHECK(simpson(cubic, 0.0, 2.0, 8) == doctest::Approx(30.0).epsilon(1e-15));
    Eigen::VectorXd nodes(5);
    const double h = 0.5;
    for (int i = 0; i < 5; ++i) nodes[i] = cubic(i * h);
    CHECK(simpson_sampled(nodes, h) == doctest::Approx(30.0).epsilon(1e-15));
}

TEST_CASE("sinc kernels take the removable-singularity limits") {
    CHECK(sinc_half(0.0) == 0.5);
    CHECK(sinc(0.0) == 1.0);
    // series branch and direct evaluation agree at the crossover
    for (double z : {9.9e-5, 1.01e-4, -9.9e-5, -1.01e-4}) {
        CHECK(std::abs(sinc_half(z) - std::sin(0.5 * z) / z) < 1e-17);
        CHECK(std::abs(sinc(z) - std::sin(z) / z) < 1e-16);
    }
    CHECK(sinc_half(kPi) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
    CHECK(sinc_half(-kPi) == sinc_half(kPi));
}

TEST_CASE("quadratic phase reduction is exact at rational multiples") {
    CHECK(quadratic_phase(1600, 1.0) == Complex{1.0, 0.0});
    CHECK(quadratic_phase(41 * 41, 0.5) == Complex{-1.0, 0.0});  // odd n at half revival
    CHECK(quadratic_phase(40 * 40, 0.5) == Complex{1.0, 0.0});
    const Complex quarter = quadratic_phase(41 * 41, 0.25);  // odd n^2 = 8j + 1
    CHECK(std::abs(quarter - Complex{0.0, -1.0}) < 1e-15);
}

TEST_CASE("x-space quadrature reproduces the analytic Gaussian Wigner function") {
    const GaussianState g{0.5, 40.0 * kPi, std::sqrt(2.0) / 20.0, 0.5, 1.0};
    QuadratureSpec spec;
    spec.panels = 8192;
    spec.halfwidth = 12.0 * g.beta();
    const auto at_t0 = [&](double y) { return g.psi(y, 0.0); };

    auto r = wigner_quadrature_x(at_t0, g.x0, g.p0, g.hbar, spec);
    CHECK(std::abs(r.value - Complex{1.0 / kPi, 0.0}) < 1e-8);
    CHECK(r.richardson_delta < 1e-10);

    // complex (spread) wavefunction at t > 0 against the sheared closed form
    const double t = 0.004;
    spec.halfwidth = 12.0 * g.beta() * std::sqrt(1.0 + (t / g.t0()) * (t / g.t0()));
    const auto at_t = [&](double y) { return g.psi(y, t); };
    for (const auto& [x, p] : {std::pair{0.55, 125.0}, std::pair{0.62, 120.0}}) {
        auto rt = wigner_quadrature_x(at_t, x, p, g.hbar, spec);
        CHECK(std::abs(rt.value.real() - g.wigner(x, p, t)) < 1e-10);
        CHECK(std::abs(rt.value.imag()) < 1e-10);
    }
}

TEST_CASE("p-space quadrature matches the Gaussian and flags slow tails") {
    const GaussianState g{0.5, 40.0 * kPi, std::sqrt(2.0) / 20.0, 0.5, 1.0};
    QuadratureSpec spec;
    spec.panels = 8192;
    spec.halfwidth = 14.0 / g.alpha;
    const auto phi0 = [&](double q) { return g.phi(q, 0.0); };
    auto r = wigner_quadrature_p(phi0, g.x0, g.p0, g.hbar, spec);
    CHECK(std::abs(r.value - Complex{1.0 / (kPi * g.hbar), 0.0}) < 1e-8);
    CHECK(r.tail_decayed);

    // box eigenstate: 1/p^2 tails keep the sampler from decaying at the cutoff
    const WellConfig well(0.5, 1.0, 1.0);
    spec.panels = 1 << 17;
    spec.halfwidth = 400.0 * kPi;
    const auto phi1 = [&](double q) { return momentum_eigenfunction(well, 1, q); };
    auto r1 = wigner_quadrature_p(phi1, 0.5, 0.0, well.hbar, spec);
    CHECK(std::abs(r1.value.real() - 1.0 / kPi) < 1e-4);
    CHECK_FALSE(r1.tail_decayed);

    // outside the box the two routes must both vanish
    const auto phi2 = [&](double q) { return momentum_eigenfunction(well, 2, q); };
    auto r_out = wigner_quadrature_p(phi2, 1.7, 0.0, well.hbar, spec);
    CHECK(std::abs(r_out.value) < 1e-4);
}

TEST_CASE("x- and p-space routes agree on the same state") {
    const WellConfig well(0.5, 1.0, 1.0);
    QuadratureSpec xs;
    xs.panels = 16384;
    QuadratureSpec ps;
    ps.panels = 1 << 17;
    ps.halfwidth = 400.0 * kPi;
    for (const auto& [n, x, p] : {std::tuple{1, 0.4, 2.0}, std::tuple{2, 0.31, -5.0}}) {
        xs.halfwidth = isw_y_halfwidth(well, x);
        const auto ux = [&, n = n](double xx) { return Complex{eigenfunction(well, n, xx), 0.0}; };
        const auto up = [&, n = n](double q) { return momentum_eigenfunction(well, n, q); };
        auto rx = wigner_quadrature_x(ux, x, p, well.hbar, xs);
        auto rp = wigner_quadrature_p(up, x, p, well.hbar, ps);
        CHECK(std::abs(rx.value - rp.value) < 1e-4);
    }
}

TEST_CASE("degenerate y-range at the wall integrates to zero") {
    const WellConfig well(0.5, 1.0, 1.0);
    CHECK(isw_y_halfwidth(well, 0.0) == 0.0);
    CHECK(isw_y_halfwidth(well, 1.2) == 0.0);
    CHECK(isw_y_halfwidth(well, 0.3) == doctest::Approx(0.3));
    QuadratureSpec spec;
    spec.halfwidth = isw_y_halfwidth(well, 0.0);
    const auto u1 = [&](double xx) { return Complex{eigenfunction(well, 1, xx), 0.0}; };
    auto r = wigner_quadrature_x(u1, 0.0, 3.0, well.hbar, spec);
    CHECK(r.value == Complex{0.0, 0.0});
}

TEST_CASE("halving check turns into a hard error when requested") {
    QuadratureSpec spec;
    spec.panels = 8;  // far too coarse for this oscillation
    spec.halfwidth = 0.5;
    spec.tolerance = 1e-12;
    const auto wiggly = [](double y) {
        return Complex{std::cos(40.0 * y), std::sin(40.0 * y)};
    };
    CHECK_THROWS_AS(wigner_quadrature_x(wiggly, 0.5, 30.0, 1.0, spec), NonConvergenceError);
    spec.panels = 7;
    CHECK_THROWS_AS(wigner_quadrature_x(wiggly, 0.5, 30.0, 1.0, spec), ConfigError);
}

TEST_CASE("overlap functional: Gaussian self-overlap pins the prefactor") {
    const GaussianState g{0.5, 0.0, std::sqrt(2.0) / 20.0, 0.5, 1.0};
    const auto self_overlap = [&](Eigen::Index nodes) {
        PhaseSpaceGrid grid = make_grid(g.x0 - 8.0 * g.beta(), g.x0 + 8.0 * g.beta(), nodes,
                                        g.p0 - 8.0 / g.alpha, g.p0 + 8.0 / g.alpha, nodes);
        WignerField f{grid, Eigen::MatrixXd(grid.nx, grid.np), std::nullopt};
        const Eigen::VectorXd xs = grid.x_nodes();
        const Eigen::VectorXd pvals = grid.p_nodes();
        for (Eigen::Index i = 0; i < grid.nx; ++i) {
            for (Eigen::Index j = 0; j < grid.np; ++j) {
                f.values(i, j) = g.wigner(xs[i], pvals[j], 0.0);
            }
        }
        return overlap_functional(f, f);
    };
    const double coarse = self_overlap(801);
    const double fine = self_overlap(1201);
    // measured constant for a normalized state is 1/(2 pi hbar)
    CHECK(std::abs(coarse - 1.0 / (2.0 * kPi)) < 1e-8);
    CHECK(std::abs(fine - coarse) < 1e-8);
}

TEST_CASE("overlap functional rejects mismatched grids") {
    PhaseSpaceGrid a = make_grid(0.0, 1.0, 11, -1.0, 1.0, 11);
    PhaseSpaceGrid b = make_grid(0.0, 1.0, 11, -1.0, 1.0, 13);
    WignerField fa{a, Eigen::MatrixXd::Zero(11, 11), std::nullopt};
    WignerField fb{b, Eigen::MatrixXd::Zero(11, 13), std::nullopt};
    CHECK_THROWS_AS(overlap_functional(fa, fb), ShapeError);
}

TEST_CASE("conditionally convergent trig integrals hit the handbook branches") {
    CHECK(std::abs(sinc_cos_integral(0.0) - kPi) < 1e-3);
    CHECK(std::abs(sinc_cos_integral(1.0) - 0.5 * kPi) < 1e-3);
    CHECK(std::abs(sinc_cos_integral(2.0)) < 1e-3);
    CHECK(std::abs(sinc_cos_integral(-1.0) - 0.5 * kPi) < 1e-3);
    CHECK(std::abs(sinc_squared_integral() - kPi) < 1e-3);
}
