#include "wigner/wigner_analytic.hpp"

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

double wigner_eigenstate(const WellConfig& well, EigenIndex n, double x, double p) {
    require_index(n);
    const double L = well.length;
    if (x <= 0.0 || x >= L) return 0.0;
    // x = L/2 ties to the left branch; both branches agree there.
    const double chi = (x <= 0.5 * L) ? x : L - x;
    const double k = static_cast<double>(n) * kPi / L;
    const double f_minus = p / well.hbar - k;
    const double f_plus = p / well.hbar + k;
    const double g = p / well.hbar;
    // sin(2 F chi)/(4 F) == chi * sinc_half(4 F chi)
    const double t1 = chi * sinc_half(4.0 * f_minus * chi);
    const double t2 = chi * sinc_half(4.0 * f_plus * chi);
    const double t3 =
        std::cos(2.0 * static_cast<double>(n) * kPi * x / L) * 2.0 * chi * sinc_half(4.0 * g * chi);
    return (2.0 / (kPi * well.hbar * L)) * (t1 + t2 - t3);
}

Complex wigner_cross_term(const WellConfig& well, EigenIndex m, EigenIndex n,
                          double x, double p) {
    require_index(m);
    require_index(n);
    const double L = well.length;
    if (x <= 0.0 || x >= L) return {0.0, 0.0};
    const double chi = (x <= 0.5 * L) ? x : L - x;
    const double diff = static_cast<double>(m - n);
    const double sum = static_cast<double>(m + n);
    const double two_p = 2.0 * p / well.hbar;
    // sin(A chi)/(L A) == (2 chi / L) * sinc_half(2 A chi)
    const double q_sum_plus = sinc_half(2.0 * (two_p + sum * kPi / L) * chi);
    const double q_sum_minus = sinc_half(2.0 * (two_p - sum * kPi / L) * chi);
    const double q_diff_plus = sinc_half(2.0 * (two_p + diff * kPi / L) * chi);
    const double q_diff_minus = sinc_half(2.0 * (two_p - diff * kPi / L) * chi);
    const double theta = kPi * x / L;  // original x in every exponential
    const Complex e_diff{std::cos(diff * theta), std::sin(diff * theta)};
    const Complex e_sum{std::cos(sum * theta), std::sin(sum * theta)};
    const Complex bracket = e_diff * q_sum_plus + std::conj(e_diff) * q_sum_minus -
                            e_sum * q_diff_plus - std::conj(e_sum) * q_diff_minus;
    return (2.0 * chi / (kPi * well.hbar * L)) * bracket;
}

WignerField eigenstate_field(const WellConfig& well, EigenIndex n,
                             const PhaseSpaceGrid& grid, unsigned threads) {
    require_index(n);
    const Eigen::VectorXd xs = grid.x_nodes();
    const Eigen::VectorXd ps = grid.p_nodes();
    WignerField field{grid, Eigen::MatrixXd(grid.nx, grid.np), std::nullopt};
    parallel_for_index(grid.nx, threads, [&](Eigen::Index i) {
        for (Eigen::Index j = 0; j < grid.np; ++j) {
            field.values(i, j) = wigner_eigenstate(well, n, xs[i], ps[j]);
        }
    });
    return field;
}

}  // namespace wigner
