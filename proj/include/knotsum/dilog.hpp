#pragma once

// Principal-branch complex dilogarithm. Both Li2 and log take their branch
// cut values from above: a real input has its imaginary part forced to +0
// before any cut is crossed, so Li2(x) for x > 1 means Li2(x + i0).

#include <cmath>
#include <complex>
#include <numbers>

namespace knotsum {

using Complex = std::complex<double>;

inline Complex sanitize_branch(Complex z) {
    if (z.imag() == 0.0) return {z.real(), 0.0};
    return z;
}

inline Complex clog(Complex z) { return std::log(sanitize_branch(z)); }

namespace detail {

inline Complex dilog_series(Complex z) {
    Complex s = 0.0, zp = 1.0;
    for (int n = 1; n < 60; ++n) {
        zp *= z;
        s += zp / double(n * n);
    }
    return s;
}

// sum B_k w^{k+1} / (k+1)!  with w = -log(1 - z); good for |z| <= 1 away
// from z = 1, used in the ring 0.5 < |z| <= 1, Re z <= 0.5
inline Complex dilog_bernoulli(Complex z) {
    static constexpr double bern[22] = {
        1.0, -0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42, 0.0, -1.0 / 30, 0.0,
        5.0 / 66, 0.0, -691.0 / 2730, 0.0, 7.0 / 6, 0.0, -3617.0 / 510, 0.0,
        43867.0 / 798, 0.0, -174611.0 / 330, 0.0};
    Complex w = -clog(1.0 - z);
    Complex s = 0.0, wk = w;
    for (int k = 0; k < 22; ++k) {
        if (bern[k] != 0.0) s += bern[k] * wk;
        wk *= w / double(k + 2);
    }
    return s;
}

}  // namespace detail

inline Complex dilog(Complex z) {
    constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    z = sanitize_branch(z);
    if (z == Complex(0.0, 0.0)) return {0.0, 0.0};
    if (z == Complex(1.0, 0.0)) return {pi2_6, 0.0};
    if (std::abs(z) > 1.0) {
        Complex lz = clog(-z);
        return -dilog(1.0 / z) - pi2_6 - 0.5 * lz * lz;
    }
    if (z.real() > 0.5) return pi2_6 - clog(z) * clog(1.0 - z) - dilog(1.0 - z);
    if (std::abs(z) <= 0.5) return detail::dilog_series(z);
    return detail::dilog_bernoulli(z);
}

}  // namespace knotsum
