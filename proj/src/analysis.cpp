#include "wigner/analysis.hpp"

#include <cmath>
#include <numbers>

namespace wigner {

std::vector<Peak> find_peaks(const Eigen::VectorXd& values, double prominence_fraction) {
    std::vector<Peak> peaks;
    const Eigen::Index n = values.size();
    if (n < 3) return peaks;
    const double global_max = values.maxCoeff();
    if (!(global_max > 0.0)) return peaks;
    const double threshold = prominence_fraction * global_max;

    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        if (!(values[i] > values[i - 1] && values[i] >= values[i + 1])) continue;
        const double height = values[i];
        double left_min = height;
        for (Eigen::Index j = i; j > 0 && values[j - 1] <= height; --j) {
            left_min = std::min(left_min, values[j - 1]);
        }
        double right_min = height;
        for (Eigen::Index j = i; j + 1 < n && values[j + 1] <= height; ++j) {
            right_min = std::min(right_min, values[j + 1]);
        }
        const double prominence = height - std::max(left_min, right_min);
        if (prominence >= threshold) peaks.push_back(Peak{i, height, prominence});
    }
    return peaks;
}

int count_lumps(const Eigen::VectorXd& values, double prominence_fraction) {
    return static_cast<int>(find_peaks(values, prominence_fraction).size());
}

double dominant_frequency(const Eigen::VectorXd& values, double dx) {
    const Eigen::Index n = values.size();
    if (n < 2 || !(dx > 0.0)) return 0.0;
    int crossings = 0;
    for (Eigen::Index i = 1; i < n; ++i) {
        if (values[i - 1] == 0.0) continue;
        if (values[i - 1] * values[i] < 0.0) ++crossings;
    }
    const double span = dx * static_cast<double>(n - 1);
    return std::numbers::pi * static_cast<double>(crossings) / span;
}

}  // namespace wigner
