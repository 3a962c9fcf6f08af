#include "wigner/reference_models.hpp"

#include <cmath>
#include <numbers>

#include "wigner/numeric.hpp"

namespace wigner {

namespace {
constexpr double kPi = std::numbers::pi;
}

FreeGaussianSpec::FreeGaussianSpec(double x0_, double p0_, double alpha_, double mass_,
                                   double hbar_)
    : x0(x0_), p0(p0_), alpha(alpha_), mass(mass_), hbar(hbar_) {
    if (!(std::isfinite(alpha) && alpha > 0.0 && std::isfinite(mass) && mass > 0.0 &&
          std::isfinite(hbar) && hbar > 0.0)) {
        throw ConfigError("free Gaussian requires positive alpha, mass and hbar");
    }
}

double free_gaussian_wigner(const FreeGaussianSpec& spec, double x, double p, double t) {
    const double dp = p - spec.p0;
    const double dx = (x - spec.x0 - p * t / spec.mass) / spec.beta();
    return (1.0 / (kPi * spec.hbar)) * std::exp(-spec.alpha * spec.alpha * dp * dp) *
           std::exp(-dx * dx);
}

TwoGaussianSpec make_two_gaussian(double x_a, double p_a, double x_b, double p_b,
                                  Complex gamma, Complex delta, double beta, double hbar) {
    if (!(std::isfinite(beta) && beta > 0.0 && std::isfinite(hbar) && hbar > 0.0)) {
        throw ConfigError("two-Gaussian spec requires positive beta and hbar");
    }
    const double scale = std::sqrt(std::norm(gamma) + std::norm(delta));
    if (!(scale > 0.0)) throw ConfigError("two-Gaussian amplitudes must not both vanish");
    return TwoGaussianSpec{x_a, p_a, x_b, p_b, gamma / scale, delta / scale, beta, hbar};
}

double two_gaussian_wigner(const TwoGaussianSpec& spec, double x, double p) {
    const double alpha = spec.beta / spec.hbar;
    const double x_bar = 0.5 * (spec.x_a + spec.x_b);
    const double p_bar = 0.5 * (spec.p_a + spec.p_b);
    const auto lump = [&](double xc, double pc) {
        const double u = alpha * (p - pc);
        const double v = (x - xc) / spec.beta;
        return std::exp(-u * u) * std::exp(-v * v);
    };
    const double direct =
        std::norm(spec.gamma) * lump(spec.x_a, spec.p_a) + std::norm(spec.delta) * lump(spec.x_b, spec.p_b);
    const double phase = (spec.x_a * spec.p_b - spec.x_b * spec.p_a) / spec.hbar -
                         (spec.x_a - spec.x_b) * (p - p_bar) / spec.hbar +
                         (spec.p_a - spec.p_b) * x / spec.hbar;
    const Complex rotor{std::cos(phase), std::sin(phase)};
    const double cross =
        2.0 * lump(x_bar, p_bar) * (spec.gamma * std::conj(spec.delta) * rotor).real();
    return (direct + cross) / (kPi * spec.hbar);
}

double laguerre(int n, double z) {
    if (n < 0 || n > 50) throw ConfigError("laguerre order must be in [0, 50]");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double curr = 1.0 - z;
    for (int k = 1; k < n; ++k) {
        const double next =
            ((2.0 * k + 1.0 - z) * curr - static_cast<double>(k) * prev) / static_cast<double>(k + 1);
        prev = curr;
        curr = next;
    }
    return curr;
}

double sho_wigner(int n, double x, double p, double b, double hbar) {
    if (n < 0) throw ConfigError("oscillator index must be >= 0");
    if (!(b > 0.0 && hbar > 0.0)) throw ConfigError("sho_wigner requires positive b and hbar");
    const double rho2 = x * x / (b * b) + b * b * p * p / (hbar * hbar);
    const double base = std::exp(-rho2) * laguerre(n, 2.0 * rho2) / (kPi * hbar);
    return (n % 2 == 0) ? base : -base;
}

double ClassicalDensity::operator()(double point) const {
    switch (kind) {
        case ClassicalKind::uniform_x:
            if (point <= 0.0 || point >= parameter) {
                throw SupportError("position outside the box");
            }
            return 1.0 / parameter;
        case ClassicalKind::dirac_pair_p:
            throw SupportError("dirac momentum pair has atoms, not pointwise values");
        case ClassicalKind::sho_x:
        case ClassicalKind::sho_p: {
            const double amp = parameter;
            if (!(std::abs(point) < amp)) {
                throw SupportError("point outside the classical turning interval");
            }
            return 1.0 / (kPi * std::sqrt(amp * amp - point * point));
        }
    }
    throw SupportError("unknown classical density kind");
}

std::array<std::pair<double, double>, 2> ClassicalDensity::atoms() const {
    if (kind != ClassicalKind::dirac_pair_p) {
        throw SupportError("only the dirac momentum pair is atomic");
    }
    return {{{-parameter, 0.5}, {parameter, 0.5}}};
}

double ClassicalDensity::normalization(int panels) const {
    switch (kind) {
        case ClassicalKind::uniform_x:
            // endpoint value is the interior limit; a measure-zero choice
            return simpson([&](double) { return 1.0 / parameter; }, 0.0, parameter, panels);
        case ClassicalKind::dirac_pair_p: {
            const auto a = atoms();
            return a[0].second + a[1].second;
        }
        case ClassicalKind::sho_x:
        case ClassicalKind::sho_p:
            // point = amp*sin(theta) turns the density into the constant
            // 1/pi over [-pi/2, pi/2]
            return simpson([](double) { return 1.0 / kPi; }, -0.5 * kPi, 0.5 * kPi, panels);
    }
    throw SupportError("unknown classical density kind");
}

ClassicalDensity make_uniform_position_density(double L) {
    if (!(L > 0.0)) throw ConfigError("box width must be positive");
    return ClassicalDensity{ClassicalKind::uniform_x, L};
}

ClassicalDensity make_dirac_momentum_pair(double p0) {
    if (!(p0 > 0.0)) throw ConfigError("momentum magnitude must be positive");
    return ClassicalDensity{ClassicalKind::dirac_pair_p, p0};
}

ClassicalDensity make_sho_position_density(double x_amplitude) {
    if (!(x_amplitude > 0.0)) throw ConfigError("turning amplitude must be positive");
    return ClassicalDensity{ClassicalKind::sho_x, x_amplitude};
}

ClassicalDensity make_sho_momentum_density(double p_amplitude) {
    if (!(p_amplitude > 0.0)) throw ConfigError("turning amplitude must be positive");
    return ClassicalDensity{ClassicalKind::sho_p, p_amplitude};
}

}  // namespace wigner
