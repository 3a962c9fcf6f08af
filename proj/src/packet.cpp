#include "wigner/packet.hpp"

#include <cmath>
#include <numbers>

#include "wigner/numeric.hpp"

namespace wigner {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRetainThreshold = 1e-14;

// Eigenphases g_n = a_n exp(-i E_n t / hbar) over the retained window,
// with the quadratic spectrum reduced mod 2 pi exactly.
std::vector<Complex> evolved_amplitudes(const WellConfig& well, const CoefficientSet& coeffs,
                                        double t) {
    const double tau = t / revival_time(well);
    std::vector<Complex> g;
    g.reserve(coeffs.retained.size());
    for (int n : coeffs.retained) {
        const long long k = static_cast<long long>(n) * static_cast<long long>(n);
        g.push_back(coeffs.coefficient(n) * quadratic_phase(k, tau));
    }
    return g;
}

}  // namespace

double GaussianPacketSpec::position_spread() const noexcept { return b / std::sqrt(2.0); }

double revival_time(const WellConfig& well) {
    return 4.0 * well.mass * well.length * well.length / (well.hbar * kPi);
}

CoefficientSet expansion_coefficients(const WellConfig& well, const GaussianPacketSpec& packet,
                                      int n_max) {
    if (!(std::isfinite(packet.b) && packet.b > 0.0)) {
        throw PacketPlacementError("packet width b must be positive and finite");
    }
    if (n_max < 1) throw ConfigError("n_max must be at least 1");
    const double margin = std::min(packet.x0, well.length - packet.x0);
    if (!(margin >= 5.0 * packet.position_spread())) {
        throw PacketPlacementError(
            "packet must sit at least 5 position spreads away from each wall");
    }

    const double L = well.length;
    const double hbar = well.hbar;
    const double b = packet.b;
    const double prefactor = std::sqrt(4.0 * b * kPi / (L * std::sqrt(kPi)));
    const Complex half_over_i{0.0, -0.5};  // 1/(2i)

    CoefficientSet set;
    set.amplitudes.resize(n_max);
    double norm2 = 0.0;
    double peak = -1.0;
    for (int n = 1; n <= n_max; ++n) {
        const double pn = well.momentum_quantum(n);
        const double lobe_plus = std::exp(-b * b * (packet.p0 + pn) * (packet.p0 + pn) /
                                          (2.0 * hbar * hbar));
        const double lobe_minus = std::exp(-b * b * (packet.p0 - pn) * (packet.p0 - pn) /
                                           (2.0 * hbar * hbar));
        const double arg = static_cast<double>(n) * kPi * packet.x0 / L;
        const Complex swing{std::cos(arg), std::sin(arg)};
        const Complex a = half_over_i * prefactor * (swing * lobe_plus - std::conj(swing) * lobe_minus);
        set.amplitudes[n - 1] = a;
        const double mag2 = std::norm(a);
        norm2 += mag2;
        if (mag2 > peak) {
            peak = mag2;
            set.n0 = n;
        }
    }
    set.residual = 1.0 - norm2;
    if (!(std::abs(set.residual) < 1e-10)) {
        throw TruncationError("coefficient set is not normalized to 1e-10 at this n_max");
    }
    set.amplitudes /= std::sqrt(norm2);
    for (int n = 1; n <= n_max; ++n) {
        if (std::abs(set.amplitudes[n - 1]) > kRetainThreshold) set.retained.push_back(n);
    }
    return set;
}

TimeScales time_scales(const WellConfig& well, const GaussianPacketSpec& packet,
                       const CoefficientSet& coeffs) {
    const double t_classical = 2.0 * well.mass * well.length * well.length /
                               (well.hbar * kPi * static_cast<double>(coeffs.n0));
    const double t_revival = static_cast<double>(2 * coeffs.n0) * t_classical;
    const double t_spreading = well.mass * packet.b * packet.b / well.hbar;
    return TimeScales{t_classical, t_revival, t_spreading};
}

Complex packet_psi(const WellConfig& well, const CoefficientSet& coeffs, double x, double t) {
    const double tau = t / revival_time(well);
    Complex acc{0.0, 0.0};
    for (int n = 1; n <= coeffs.max_index(); ++n) {
        const long long k = static_cast<long long>(n) * static_cast<long long>(n);
        acc += coeffs.coefficient(n) * quadratic_phase(k, tau) * eigenfunction(well, n, x);
    }
    return acc;
}

Complex packet_phi(const WellConfig& well, const CoefficientSet& coeffs, double p, double t) {
    const double tau = t / revival_time(well);
    Complex acc{0.0, 0.0};
    for (int n = 1; n <= coeffs.max_index(); ++n) {
        const long long k = static_cast<long long>(n) * static_cast<long long>(n);
        acc += coeffs.coefficient(n) * quadratic_phase(k, tau) * momentum_eigenfunction(well, n, p);
    }
    return acc;
}

double fidelity(const WellConfig& well, const CoefficientSet& coeffs, double t) {
    const double tau = t / revival_time(well);
    Complex acc{0.0, 0.0};
    for (int n = 1; n <= coeffs.max_index(); ++n) {
        const long long k = static_cast<long long>(n) * static_cast<long long>(n);
        acc += std::norm(coeffs.coefficient(n)) * quadratic_phase(k, tau);
    }
    return std::norm(acc);
}

namespace detail {

// Shared core of the per-point double sum.  The cross-term tables over
// k = m+n and |m-n| turn each pair into a handful of multiplies; the
// pair loop itself stays in the fixed ascending (m, n) order.
Complex packet_point_sum(const WellConfig& well, const std::vector<int>& retained,
                         const std::vector<Complex>& g, double x, double p) {
    const double L = well.length;
    if (retained.empty() || x <= 0.0 || x >= L) return {0.0, 0.0};
    const double chi = (x <= 0.5 * L) ? x : L - x;
    const double theta = kPi * x / L;
    const double two_p = 2.0 * p / well.hbar;
    const int k_max = 2 * retained.back();

    std::vector<double> q_plus(static_cast<size_t>(k_max) + 1);
    std::vector<double> q_minus(static_cast<size_t>(k_max) + 1);
    std::vector<Complex> swirl(static_cast<size_t>(k_max) + 1);
    const Complex step{std::cos(theta), std::sin(theta)};
    swirl[0] = {1.0, 0.0};
    for (int k = 0; k <= k_max; ++k) {
        const double rate = static_cast<double>(k) * kPi / L;
        q_plus[k] = sinc_half(2.0 * (two_p + rate) * chi);
        q_minus[k] = sinc_half(2.0 * (two_p - rate) * chi);
        if (k > 0) swirl[k] = swirl[k - 1] * step;
    }

    Complex acc{0.0, 0.0};
    for (size_t im = 0; im < retained.size(); ++im) {
        const int m = retained[im];
        const Complex gm_conj = std::conj(g[im]);
        for (size_t in = 0; in < retained.size(); ++in) {
            const int n = retained[in];
            const int d = m - n;
            const int s = m + n;
            const Complex e_diff = (d >= 0) ? swirl[d] : std::conj(swirl[-d]);
            const double qd_plus = (d >= 0) ? q_plus[d] : q_minus[-d];
            const double qd_minus = (d >= 0) ? q_minus[d] : q_plus[-d];
            const Complex bracket = e_diff * q_plus[s] + std::conj(e_diff) * q_minus[s] -
                                    swirl[s] * qd_plus - std::conj(swirl[s]) * qd_minus;
            acc += gm_conj * g[in] * bracket;
        }
    }
    return (2.0 * chi / (kPi * well.hbar * L)) * acc;
}

Complex wigner_packet_sum(const WellConfig& well, const CoefficientSet& coeffs,
                          double x, double p, double t) {
    const std::vector<Complex> g = evolved_amplitudes(well, coeffs, t);
    return packet_point_sum(well, coeffs.retained, g, x, p);
}

}  // namespace detail

double wigner_packet(const WellConfig& well, const CoefficientSet& coeffs,
                     double x, double p, double t) {
    return detail::wigner_packet_sum(well, coeffs, x, p, t).real();
}

WignerField packet_field(const WellConfig& well, const CoefficientSet& coeffs,
                         const PhaseSpaceGrid& grid, double t, unsigned threads) {
    const std::vector<Complex> g = evolved_amplitudes(well, coeffs, t);
    const Eigen::VectorXd xs = grid.x_nodes();
    const Eigen::VectorXd ps = grid.p_nodes();
    WignerField field{grid, Eigen::MatrixXd(grid.nx, grid.np), t};
    parallel_for_index(grid.nx, threads, [&](Eigen::Index i) {
        for (Eigen::Index j = 0; j < grid.np; ++j) {
            field.values(i, j) =
                detail::packet_point_sum(well, coeffs.retained, g, xs[i], ps[j]).real();
        }
    });
    return field;
}

}  // namespace wigner
