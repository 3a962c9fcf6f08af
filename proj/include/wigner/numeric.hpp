#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "wigner/core.hpp"

namespace wigner {

/// sin(z/2)/z with a series branch near z = 0 (limit 1/2).  The branch
/// error below |z| = 1e-4 is under 1e-17, far inside double rounding.
inline double sinc_half(double z) noexcept {
    if (std::abs(z) < 1e-4) {
        const double z2 = z * z;
        return 0.5 - z2 / 48.0 + z2 * z2 / 3840.0;
    }
    return std::sin(0.5 * z) / z;
}

/// sin(z)/z, limit 1 at z = 0.
inline double sinc(double z) noexcept {
    if (std::abs(z) < 1e-4) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

/// i^k for integer k, exact (no trig rounding).
inline Complex unit_ipow(int k) noexcept {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

/// exp(-2*pi*i * k * tau) for integer k, with the integer part of k*tau
/// removed exactly before any trig call.  Keeps stationary phases exact
/// at rational tau (k*tau integer => result is exactly 1).
inline Complex quadratic_phase(long long k, double tau) noexcept {
    const double whole = std::floor(tau);
    const double f = tau - whole;  // exact
    double r = static_cast<double>(k) * f;
    r -= std::nearbyint(r);  // r in [-1/2, 1/2], shift by an exact integer
    const double angle = -2.0 * std::numbers::pi * r;
    return {std::cos(angle), std::sin(angle)};
}

/// Composite Simpson over [a, b] with an even panel count.  Works for any
/// value type closed under + and scalar *.
template <class F>
auto simpson(F&& f, double a, double b, int panels) -> decltype(f(a)) {
    using R = decltype(f(a));
    const double h = (b - a) / static_cast<double>(panels);
    R odd{};
    R even{};
    for (int i = 1; i < panels; i += 2) odd += f(a + static_cast<double>(i) * h);
    for (int i = 2; i < panels; i += 2) even += f(a + static_cast<double>(i) * h);
    R ends = f(a) + f(b);
    return (h / 3.0) * (ends + 4.0 * odd + 2.0 * even);
}

/// Composite Simpson on an equally spaced sample vector.  Odd sample
/// counts integrate exactly in Simpson form; an even count falls back to
/// Simpson on the leading nodes plus a trapezoid on the final panel.
template <class Derived>
double simpson_sampled(const Eigen::DenseBase<Derived>& v, double h) {
    const Eigen::Index n = v.size();
    if (n < 3) {
        if (n == 2) return 0.5 * h * (v[0] + v[1]);
        return 0.0;
    }
    const Eigen::Index last = (n % 2 == 1) ? n - 1 : n - 2;
    double odd = 0.0;
    double even = 0.0;
    for (Eigen::Index i = 1; i < last; i += 2) odd += v[i];
    for (Eigen::Index i = 2; i < last; i += 2) even += v[i];
    double total = (h / 3.0) * (v[0] + v[last] + 4.0 * odd + 2.0 * even);
    if (n % 2 == 0) total += 0.5 * h * (v[n - 2] + v[n - 1]);
    return total;
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers over
/// contiguous blocks.  Each index is touched exactly once, so results do
/// not depend on the worker count.
inline void parallel_for_index(Eigen::Index count, unsigned threads,
                               const std::function<void(Eigen::Index)>& fn) {
    if (threads <= 1 || count < 2) {
        for (Eigen::Index i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const Eigen::Index chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const Eigen::Index lo = static_cast<Eigen::Index>(w) * chunk;
        const Eigen::Index hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (Eigen::Index i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace wigner
