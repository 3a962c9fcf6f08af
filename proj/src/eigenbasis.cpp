#include "wigner/eigenbasis.hpp"

#include <cmath>
#include <numbers>

#include "wigner/numeric.hpp"

namespace wigner {

namespace {

constexpr double kPi = std::numbers::pi;

void require_index(EigenIndex n) {
    if (n < 1) throw ConfigError("eigenstate index must satisfy n >= 1");
}

}  // namespace

double energy(const WellConfig& well, EigenIndex n) {
    require_index(n);
    const double nn = static_cast<double>(n);
    return well.hbar * well.hbar * kPi * kPi * nn * nn /
           (2.0 * well.mass * well.length * well.length);
}

double eigenfunction(const WellConfig& well, EigenIndex n, double x) {
    require_index(n);
    if (x <= 0.0 || x >= well.length) return 0.0;
    const double nn = static_cast<double>(n);
    return std::sqrt(2.0 / well.length) * std::sin(nn * kPi * x / well.length);
}

Complex momentum_eigenfunction(const WellConfig& well, EigenIndex n, double p) {
    require_index(n);
    const double z = p * well.length / well.hbar;
    const double zm = z - static_cast<double>(n) * kPi;
    const double zp = z + static_cast<double>(n) * kPi;
    const Complex minus_i{0.0, -1.0};
    const double half_arg = 0.5 * p * well.length / well.hbar;
    const Complex carrier{std::cos(half_arg), -std::sin(half_arg)};  // e^{-ipL/2hbar}
    return minus_i * std::sqrt(well.length / (kPi * well.hbar)) * carrier *
           (unit_ipow(n) * sinc_half(zm) - unit_ipow(-n) * sinc_half(zp));
}

double momentum_density(const WellConfig& well, EigenIndex n, double p) {
    require_index(n);
    const double z = p * well.length / well.hbar;
    const double sm = sinc_half(z - static_cast<double>(n) * kPi);
    const double sp = sinc_half(z + static_cast<double>(n) * kPi);
    const double cos_n_pi = (n % 2 == 0) ? 1.0 : -1.0;
    return (well.length / (well.hbar * kPi)) * (sm * sm + sp * sp - 2.0 * cos_n_pi * sm * sp);
}

double eigenfunction_overlap(const WellConfig& well, EigenIndex m, EigenIndex n) {
    require_index(m);
    require_index(n);
    const auto integrand = [&](double x) {
        return eigenfunction(well, m, x) * eigenfunction(well, n, x);
    };
    const int panels = 128 * std::max(m, n);
    const double coarse = simpson(integrand, 0.0, well.length, panels);
    const double fine = simpson(integrand, 0.0, well.length, 2 * panels);
    if (std::abs(fine - coarse) > 1e-9) {
        throw NonConvergenceError("eigenfunction overlap quadrature did not converge");
    }
    return fine;
}

}  // namespace wigner
