#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wigner {

using Complex = std::complex<double>;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SupportError : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PacketPlacementError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Physical constants of the box: mass, width L and hbar, all in the
/// caller's unit system.  Immutable after construction; everything
/// downstream is a pure function of (config, inputs).
struct WellConfig {
    double mass;
    double length;
    double hbar;

    WellConfig(double mass_, double length_, double hbar_);

    /// p_n = n*pi*hbar/L, strictly increasing in n.
    double momentum_quantum(int n) const noexcept {
        return static_cast<double>(n) * pi() * hbar / length;
    }

    static double pi() noexcept;
};

WellConfig make_well_config(double mass, double length, double hbar);

/// Rectangular (x,p) sampling: nx (resp. np) evenly spaced nodes on the
/// closed interval, endpoints pinned bit-for-bit.
struct PhaseSpaceGrid {
    double x_min, x_max;
    Eigen::Index nx;
    double p_min, p_max;
    Eigen::Index np;

    Eigen::VectorXd x_nodes() const;
    Eigen::VectorXd p_nodes() const;
    double dx() const noexcept { return (x_max - x_min) / static_cast<double>(nx - 1); }
    double dp() const noexcept { return (p_max - p_min) / static_cast<double>(np - 1); }
};

PhaseSpaceGrid make_grid(double x_min, double x_max, Eigen::Index nx,
                         double p_min, double p_max, Eigen::Index np);

/// Real phase-space field sampled on a grid.  values(i, j) belongs to
/// (x_i, p_j); units 1/(length*momentum).  timestamp is empty for
/// stationary fields.
struct WignerField {
    PhaseSpaceGrid grid;
    Eigen::MatrixXd values;  // nx rows, np columns
    std::optional<double> timestamp;
};

/// Characteristic times of a wave packet: classical period, revival time
/// and spreading time.  t_revival == 2*n0*t_classical by construction.
struct TimeScales {
    double t_classical;
    double t_revival;
    double t_spreading;
};

/// Evenly spaced closed-interval nodes with both endpoints set exactly.
Eigen::VectorXd linspace_nodes(double lo, double hi, Eigen::Index count);

}  // namespace wigner
