#pragma once

#include <functional>

#include "wigner/core.hpp"

namespace wigner {

/// Brute-force quadrature setup.  `panels` is the fine Simpson panel
/// count (even, >= 8); the convergence check compares against the
/// half-resolution estimate on the same samples.  `halfwidth` is the y-
/// (or q-) integration half-range.  A positive `tolerance` turns the
/// check into a hard error.
struct QuadratureSpec {
    int panels = 2048;
    double halfwidth = 0.0;
    double tolerance = 0.0;
};

/// Value of a defining-integral evaluation together with its convergence
/// certificate.  `richardson_delta` is |I_fine - I_half|; `tail_decayed`
/// reports the sampler-decay precondition of the momentum-space route
/// (always true for the position-space route).
struct QuadratureResult {
    Complex value;
    double richardson_delta = 0.0;
    bool tail_decayed = true;
};

using StateSampler = std::function<Complex(double)>;

/// Defining integral in position space:
/// (1/pi hbar) * Int_{-Y}^{Y} conj(psi(x+y)) psi(x-y) e^{2ipy/hbar} dy.
QuadratureResult wigner_quadrature_x(const StateSampler& psi, double x, double p,
                                     double hbar, const QuadratureSpec& spec);

/// Same integral with two different states, the defining form of the
/// off-diagonal cross term.
QuadratureResult wigner_cross_quadrature_x(const StateSampler& psi_a, const StateSampler& psi_b,
                                           double x, double p, double hbar,
                                           const QuadratureSpec& spec);

/// Momentum-space route:
/// (1/pi hbar) * Int_{-Q}^{Q} conj(phi(p+q)) phi(p-q) e^{-2iqx/hbar} dq.
/// tail_decayed is false when |phi|^2 at the cutoff exceeds 1e-10 of the
/// sampled peak (slow 1/p^2 tails).
QuadratureResult wigner_quadrature_p(const StateSampler& phi, double x, double p,
                                     double hbar, const QuadratureSpec& spec);

/// Exact y-range of the box: min(x, L-x), clipped to zero outside [0, L].
double isw_y_halfwidth(const WellConfig& well, double x);

/// Simpson integration of the field along p; one entry per x node.
Eigen::VectorXd marginal_x(const WignerField& field);

/// Simpson integration of the field along x; one entry per p node.
Eigen::VectorXd marginal_p(const WignerField& field);

/// 2-D Simpson of the pointwise product of two fields on the same grid.
/// Throws ShapeError on any grid mismatch.
double overlap_functional(const WignerField& a, const WignerField& b);

/// Int sin(z) cos(mz) / z dz over [-Z, Z] with Z = 1e4, tail-averaged
/// over one 2 pi window at the cutoff to settle the conditionally
/// convergent oscillation.  Branch values are pi (m^2 < 1), pi/2
/// (m = +-1) and 0 (m^2 > 1).
double sinc_cos_integral(double m);

/// Int sin^2(z)/z^2 dz over [-Z, Z], Z = 1e4; converges absolutely.
double sinc_squared_integral();

}  // namespace wigner
