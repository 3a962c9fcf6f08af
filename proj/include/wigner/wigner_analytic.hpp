#pragma once

#include "wigner/core.hpp"
#include "wigner/eigenbasis.hpp"

namespace wigner {

/// Closed-form Wigner distribution of eigenstate n.  Zero outside
/// [0, L]; on the right half the sin-type factors carry L - x while the
/// cosine keeps x (the two agree there by symmetry).  Every quotient is
/// evaluated singularity-safe, so p -> 0 and p -> +-p_n take the
/// linear-in-x limits that build the triangular fins and spine.
double wigner_eigenstate(const WellConfig& well, EigenIndex n, double x, double p);

/// Off-diagonal (cross) Wigner term between eigenstates m and n.
/// Complex in general, with conj(value(m, n)) == value(n, m); the m == n
/// case reduces to wigner_eigenstate.  On [L/2, L] the substitution
/// x -> L - x applies only inside the sin[(2p/hbar +- (m+-n)pi/L)x]
/// factors; the complex exponentials keep x.
Complex wigner_cross_term(const WellConfig& well, EigenIndex m, EigenIndex n,
                          double x, double p);

/// wigner_eigenstate sampled on a grid.  Points are independent, so the
/// result is identical for any worker count.
WignerField eigenstate_field(const WellConfig& well, EigenIndex n,
                             const PhaseSpaceGrid& grid, unsigned threads = 1);

}  // namespace wigner
