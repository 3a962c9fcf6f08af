#pragma once

#include <vector>

#include "wigner/core.hpp"
#include "wigner/eigenbasis.hpp"

namespace wigner {

/// Initial Gaussian packet: center x0, boost p0 and width parameter b
/// (position spread b/sqrt(2)).  Coefficient construction requires the
/// packet to sit at least 5 spreads away from each wall, so the wall
/// overlap it neglects stays exponentially small.
struct GaussianPacketSpec {
    double x0;
    double p0;
    double b;

    double position_spread() const noexcept;  // b/sqrt(2)
};

/// Truncated eigenstate expansion of a packet.  coefficient(n) is valid
/// for n in [1, max_index()].  Renormalized so the moduli sum to one;
/// `residual` records 1 - sum|a_n|^2 before that rescale.  `retained`
/// lists the indices with |a_n| > 1e-14, the window the time-dependent
/// double sum runs over.
struct CoefficientSet {
    Eigen::VectorXcd amplitudes;  // index i holds n = i + 1
    int n0 = 0;                   // index of max |a_n|
    double residual = 0.0;
    std::vector<int> retained;

    int max_index() const noexcept { return static_cast<int>(amplitudes.size()); }
    Complex coefficient(int n) const { return amplitudes[n - 1]; }
};

/// T_rev = 4 m L^2 / (hbar pi); every eigenphase is a multiple of
/// 2 pi n^2 t / T_rev, which the evolution ops exploit for exact
/// reduction.
double revival_time(const WellConfig& well);

/// Gaussian-lobe closed form for the expansion coefficients, with the
/// complex (1/2i) prefactor kept.  Throws PacketPlacementError when the
/// containment margin fails and TruncationError when |residual| >= 1e-10
/// at the given n_max.
CoefficientSet expansion_coefficients(const WellConfig& well, const GaussianPacketSpec& packet,
                                      int n_max = 256);

/// T_cl = 2 m L^2/(hbar pi n0), T_rev = 2 n0 T_cl (exact by
/// construction), t_spreading = m b^2 / hbar.
TimeScales time_scales(const WellConfig& well, const GaussianPacketSpec& packet,
                       const CoefficientSet& coeffs);

/// Position-space packet at time t, summed in ascending n.
Complex packet_psi(const WellConfig& well, const CoefficientSet& coeffs, double x, double t);

/// Momentum-space packet at time t.
Complex packet_phi(const WellConfig& well, const CoefficientSet& coeffs, double p, double t);

/// Squared autocorrelation |<psi(0)|psi(t)>|^2 in [0, 1].
double fidelity(const WellConfig& well, const CoefficientSet& coeffs, double t);

namespace detail {
/// Assembled double sum before the imaginary residue is dropped; the
/// residue stays below 1e-10 because conjugate index pairs cancel.
Complex wigner_packet_sum(const WellConfig& well, const CoefficientSet& coeffs,
                          double x, double p, double t);
}  // namespace detail

/// Time-dependent Wigner distribution of the packet: the double sum of
/// cross terms over the retained index window, ascending m outer and n
/// inner.  Real part of the assembled sum.
double wigner_packet(const WellConfig& well, const CoefficientSet& coeffs,
                     double x, double p, double t);

/// wigner_packet on a grid.  Per-point summation order is fixed, so the
/// field is identical for any worker count.
WignerField packet_field(const WellConfig& well, const CoefficientSet& coeffs,
                         const PhaseSpaceGrid& grid, double t, unsigned threads = 1);

}  // namespace wigner
