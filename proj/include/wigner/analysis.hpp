#pragma once

#include <vector>

#include "wigner/core.hpp"

namespace wigner {

struct Peak {
    Eigen::Index index;
    double height;
    double prominence;
};

/// Local maxima of a sampled curve whose topographic prominence reaches
/// `prominence_fraction` of the global maximum.  Prominence of a peak is
/// its height above the higher of the two valley minima reached before
/// the curve next exceeds it on either side.
std::vector<Peak> find_peaks(const Eigen::VectorXd& values, double prominence_fraction);

/// Number of prominent peaks; the lump detector used on marginals.
int count_lumps(const Eigen::VectorXd& values, double prominence_fraction = 0.1);

/// Dominant angular frequency of a signed oscillation, estimated from
/// zero crossings: pi * crossings / span.  A one-signed envelope has no
/// crossings and reports 0.
double dominant_frequency(const Eigen::VectorXd& values, double dx);

}  // namespace wigner
