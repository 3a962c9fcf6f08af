#pragma once

#include "wigner/core.hpp"

namespace wigner {

/// Quantum number of a box eigenstate; valid indices are n >= 1.
using EigenIndex = int;

/// E_n = hbar^2 pi^2 n^2 / (2 m L^2).
double energy(const WellConfig& well, EigenIndex n);

/// Position-space eigenfunction u_n(x) = sqrt(2/L) sin(n pi x / L) inside
/// the box and 0 outside (the boundary value is 0 either way).
double eigenfunction(const WellConfig& well, EigenIndex n, double x);

/// Momentum-space eigenfunction, including the global -i e^{-ipL/2hbar}
/// phase.  Both sinc-type quotients go through the singularity-safe
/// kernel, so p = +-p_n evaluates via the limit.
Complex momentum_eigenfunction(const WellConfig& well, EigenIndex n, double p);

/// |phi_n(p)|^2 in its three-term closed form; agrees with
/// |momentum_eigenfunction|^2 to rounding.
double momentum_density(const WellConfig& well, EigenIndex n, double p);

/// Numerical <u_m|u_n> over [0, L]: composite Simpson with
/// 128*max(m, n) panels plus one halving check.  Throws
/// NonConvergenceError if the two estimates differ by more than 1e-9.
double eigenfunction_overlap(const WellConfig& well, EigenIndex m, EigenIndex n);

}  // namespace wigner
