#include "wigner/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "wigner/numeric.hpp"

namespace wigner {

namespace {

constexpr double kPi = std::numbers::pi;

void require_spec(const QuadratureSpec& spec) {
    if (spec.panels < 8 || spec.panels % 2 != 0) {
        throw ConfigError("quadrature needs an even panel count >= 8");
    }
    if (!(spec.halfwidth >= 0.0) || !std::isfinite(spec.halfwidth)) {
        throw ConfigError("quadrature halfwidth must be finite and non-negative");
    }
}

// Simpson over pre-sampled values, full resolution plus the strided
// half-resolution estimate reusing the same samples.
std::pair<Complex, Complex> simpson_with_half(const std::vector<Complex>& samples, double h) {
    const int panels = static_cast<int>(samples.size()) - 1;
    Complex odd{}, even{};
    for (int i = 1; i < panels; i += 2) odd += samples[i];
    for (int i = 2; i < panels; i += 2) even += samples[i];
    const Complex fine = (h / 3.0) * (samples[0] + samples[panels] + 4.0 * odd + 2.0 * even);
    Complex odd_h{}, even_h{};
    for (int i = 2; i < panels; i += 4) odd_h += samples[i];
    for (int i = 4; i < panels; i += 4) even_h += samples[i];
    const Complex half =
        (2.0 * h / 3.0) * (samples[0] + samples[panels] + 4.0 * odd_h + 2.0 * even_h);
    return {fine, half};
}

QuadratureResult integrate_kernel(const std::function<Complex(double)>& integrand,
                                  double halfwidth, double scale, const QuadratureSpec& spec) {
    const int panels = spec.panels;
    const double h = 2.0 * halfwidth / static_cast<double>(panels);
    std::vector<Complex> samples(static_cast<size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i) {
        samples[static_cast<size_t>(i)] = integrand(-halfwidth + static_cast<double>(i) * h);
    }
    const auto [fine, half] = simpson_with_half(samples, h);
    QuadratureResult result;
    result.value = scale * fine;
    result.richardson_delta = std::abs(scale * (fine - half));
    if (spec.tolerance > 0.0 && result.richardson_delta > spec.tolerance) {
        throw NonConvergenceError("wigner quadrature halving check exceeded tolerance");
    }
    return result;
}

}  // namespace

QuadratureResult wigner_cross_quadrature_x(const StateSampler& psi_a, const StateSampler& psi_b,
                                           double x, double p, double hbar,
                                           const QuadratureSpec& spec) {
    require_spec(spec);
    if (spec.halfwidth == 0.0) return QuadratureResult{{0.0, 0.0}, 0.0, true};
    const auto integrand = [&](double y) {
        const double arg = 2.0 * p * y / hbar;
        const Complex rotor{std::cos(arg), std::sin(arg)};
        return std::conj(psi_a(x + y)) * psi_b(x - y) * rotor;
    };
    return integrate_kernel(integrand, spec.halfwidth, 1.0 / (kPi * hbar), spec);
}

QuadratureResult wigner_quadrature_x(const StateSampler& psi, double x, double p,
                                     double hbar, const QuadratureSpec& spec) {
    return wigner_cross_quadrature_x(psi, psi, x, p, hbar, spec);
}

QuadratureResult wigner_quadrature_p(const StateSampler& phi, double x, double p,
                                     double hbar, const QuadratureSpec& spec) {
    require_spec(spec);
    if (spec.halfwidth == 0.0) return QuadratureResult{{0.0, 0.0}, 0.0, true};
    double peak = 0.0;
    const auto integrand = [&](double q) {
        const Complex lo = phi(p + q);
        const Complex hi = phi(p - q);
        peak = std::max({peak, std::norm(lo), std::norm(hi)});
        const double arg = -2.0 * q * x / hbar;
        const Complex rotor{std::cos(arg), std::sin(arg)};
        return std::conj(lo) * hi * rotor;
    };
    QuadratureResult result = integrate_kernel(integrand, spec.halfwidth, 1.0 / (kPi * hbar), spec);
    const double edge =
        std::max(std::norm(phi(p + spec.halfwidth)), std::norm(phi(p - spec.halfwidth)));
    result.tail_decayed = (edge <= 1e-10 * peak);
    return result;
}

double isw_y_halfwidth(const WellConfig& well, double x) {
    if (x <= 0.0 || x >= well.length) return 0.0;
    return std::min(x, well.length - x);
}

Eigen::VectorXd marginal_x(const WignerField& field) {
    Eigen::VectorXd out(field.grid.nx);
    const double h = field.grid.dp();
    for (Eigen::Index i = 0; i < field.grid.nx; ++i) {
        out[i] = simpson_sampled(field.values.row(i), h);
    }
    return out;
}

Eigen::VectorXd marginal_p(const WignerField& field) {
    Eigen::VectorXd out(field.grid.np);
    const double h = field.grid.dx();
    for (Eigen::Index j = 0; j < field.grid.np; ++j) {
        out[j] = simpson_sampled(field.values.col(j), h);
    }
    return out;
}

double overlap_functional(const WignerField& a, const WignerField& b) {
    const auto& ga = a.grid;
    const auto& gb = b.grid;
    const bool same = ga.nx == gb.nx && ga.np == gb.np && ga.x_min == gb.x_min &&
                      ga.x_max == gb.x_max && ga.p_min == gb.p_min && ga.p_max == gb.p_max;
    if (!same) throw ShapeError("overlap functional requires identical grids");
    Eigen::VectorXd per_x(ga.nx);
    const Eigen::MatrixXd product = a.values.cwiseProduct(b.values);
    for (Eigen::Index i = 0; i < ga.nx; ++i) {
        per_x[i] = simpson_sampled(product.row(i), ga.dp());
    }
    return simpson_sampled(per_x, ga.dx());
}

double sinc_cos_integral(double m) {
    constexpr double kCutoff = 1e4;
    constexpr double kWindow = 2.0 * kPi;
    constexpr int kPanels = 1 << 19;
    const auto f = [m](double z) { return sinc(z) * std::cos(m * z); };
    // average of F(u) over [Z, Z+W] written as F(Z) plus a weighted tail
    const double body = simpson(f, 0.0, kCutoff, kPanels);
    const double tail = simpson([&](double v) { return (kCutoff + kWindow - v) * f(v); },
                                kCutoff, kCutoff + kWindow, 4096) /
                        kWindow;
    return 2.0 * (body + tail);
}

double sinc_squared_integral() {
    constexpr double kCutoff = 1e4;
    constexpr int kPanels = 1 << 19;
    const auto f = [](double z) {
        const double s = sinc(z);
        return s * s;
    };
    return 2.0 * simpson(f, 0.0, kCutoff, kPanels);
}

}  // namespace wigner
