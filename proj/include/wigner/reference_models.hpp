#pragma once

#include <array>
#include <utility>

#include "wigner/core.hpp"

namespace wigner {

/// Free Gaussian benchmark packet.  alpha is the momentum-width
/// parameter (1/momentum); beta = hbar*alpha is the position width.
struct FreeGaussianSpec {
    double x0;
    double p0;
    double alpha;
    double mass;
    double hbar = 1.0;

    FreeGaussianSpec(double x0_, double p0_, double alpha_, double mass_, double hbar_ = 1.0);

    double beta() const noexcept { return hbar * alpha; }
    double spreading_time() const noexcept { return mass * hbar * alpha * alpha; }
};

/// (1/pi hbar) exp(-alpha^2 (p-p0)^2) exp(-(x - x0 - p t/m)^2 / beta^2);
/// strictly positive everywhere.
double free_gaussian_wigner(const FreeGaussianSpec& spec, double x, double p, double t);

/// Superposition of two Gaussians with amplitudes gamma and delta and a
/// shared width beta.  make_two_gaussian rescales the amplitudes so
/// |gamma|^2 + |delta|^2 == 1.
struct TwoGaussianSpec {
    double x_a, p_a;
    double x_b, p_b;
    Complex gamma, delta;
    double beta;
    double hbar = 1.0;
};

TwoGaussianSpec make_two_gaussian(double x_a, double p_a, double x_b, double p_b,
                                  Complex gamma, Complex delta, double beta,
                                  double hbar = 1.0);

/// Two positive lumps plus the real oscillatory cross term centered at
/// the midpoint ((x_a+x_b)/2, (p_a+p_b)/2).
double two_gaussian_wigner(const TwoGaussianSpec& spec, double x, double p);

/// Laguerre polynomial L_n(z) by the three-term recurrence; n <= 50.
double laguerre(int n, double z);

/// Harmonic-oscillator Wigner function ((-1)^n/pi hbar) e^{-rho^2}
/// L_n(2 rho^2) with rho^2 = x^2/b^2 + b^2 p^2/hbar^2.  Negative at the
/// origin for every odd n.
double sho_wigner(int n, double x, double p, double b, double hbar);

enum class ClassicalKind { uniform_x, dirac_pair_p, sho_x, sho_p };

/// Classical phase-space marginals for the box and the oscillator.  The
/// momentum pair is kept as two half-weight atoms, never smoothed.
struct ClassicalDensity {
    ClassicalKind kind;
    double parameter;  // L, p0, x_A or p_A depending on kind

    /// Pointwise density.  Throws SupportError outside the classical
    /// support and for the atomic dirac_pair_p kind.
    double operator()(double point) const;

    /// The two (location, weight) atoms of the dirac_pair_p kind.
    std::array<std::pair<double, double>, 2> atoms() const;

    /// Integral of the density over its support.  The sho kinds use the
    /// arcsin substitution, which absorbs the endpoint singularity.
    double normalization(int panels = 256) const;
};

ClassicalDensity make_uniform_position_density(double L);
ClassicalDensity make_dirac_momentum_pair(double p0);
ClassicalDensity make_sho_position_density(double x_amplitude);
ClassicalDensity make_sho_momentum_density(double p_amplitude);

}  // namespace wigner
