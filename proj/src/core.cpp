#include "wigner/core.hpp"

#include <cmath>
#include <numbers>

namespace wigner {

double WellConfig::pi() noexcept { return std::numbers::pi; }

WellConfig::WellConfig(double mass_, double length_, double hbar_)
    : mass(mass_), length(length_), hbar(hbar_) {
    const bool ok = std::isfinite(mass) && mass > 0.0 && std::isfinite(length) &&
                    length > 0.0 && std::isfinite(hbar) && hbar > 0.0;
    if (!ok) {
        throw ConfigError("well configuration requires finite positive mass, length and hbar");
    }
}

WellConfig make_well_config(double mass, double length, double hbar) {
    return WellConfig(mass, length, hbar);
}

Eigen::VectorXd linspace_nodes(double lo, double hi, Eigen::Index count) {
    Eigen::VectorXd v(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (Eigen::Index i = 0; i < count; ++i) {
        v[i] = lo + static_cast<double>(i) * step;
    }
    v[0] = lo;
    v[count - 1] = hi;
    return v;
}

PhaseSpaceGrid make_grid(double x_min, double x_max, Eigen::Index nx,
                         double p_min, double p_max, Eigen::Index np) {
    if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_min < x_max)) {
        throw GridError("grid requires x_min < x_max");
    }
    if (!(std::isfinite(p_min) && std::isfinite(p_max) && p_min < p_max)) {
        throw GridError("grid requires p_min < p_max");
    }
    if (nx < 2 || np < 2) {
        throw GridError("grid requires nx >= 2 and np >= 2");
    }
    return PhaseSpaceGrid{x_min, x_max, nx, p_min, p_max, np};
}

Eigen::VectorXd PhaseSpaceGrid::x_nodes() const { return linspace_nodes(x_min, x_max, nx); }
Eigen::VectorXd PhaseSpaceGrid::p_nodes() const { return linspace_nodes(p_min, p_max, np); }

}  // namespace wigner
