#pragma once

// Complex volume from a shadow coloring. Each crossing contributes a
// dilogarithm potential W_j in the four quadrant variables; the closed-form
// point w_k = det2(p, s_k) satisfies exp(w_k dW/dw_k) = 1 at every face, and
// W0 = W - sum g_k log w_k there equals i(vol + i cs) modulo pi^2.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "coloring.hpp"
#include "dilog.hpp"

namespace knotsum {

namespace detail {

// Dilog terms of the positive-crossing potential in quadrant slots
// 0=a, 1=b, 2=c, 3=d:
//   -Li2(wc/wb) - Li2(wc/wd) + Li2(wa wc/(wb wd)) + Li2(wb/wa) + Li2(wd/wa)
// followed by -pi^2/6 + log(wb/wa) log(wd/wa). Negative crossings negate
// everything.
struct PotentialTerm {
    int coeff;
    std::array<int, 2> num;
    std::array<int, 2> den;
    int factors;  // 1 or 2 slots used in num and den
};

inline constexpr std::array<PotentialTerm, 5> kPotentialTerms{{
    {-1, {2, 0}, {1, 0}, 1},
    {-1, {2, 0}, {3, 0}, 1},
    {+1, {0, 2}, {1, 3}, 2},
    {+1, {1, 0}, {0, 0}, 1},
    {+1, {3, 0}, {0, 0}, 1},
}};

inline Complex term_argument(const PotentialTerm& t, const std::array<Complex, 4>& w) {
    Complex u = 1.0;
    for (int i = 0; i < t.factors; ++i) u *= w[t.num[i]];
    for (int i = 0; i < t.factors; ++i) u /= w[t.den[i]];
    return u;
}

}  // namespace detail

inline Complex crossing_potential(int sign, Complex wa, Complex wb, Complex wc, Complex wd) {
    constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    std::array<Complex, 4> w{wa, wb, wc, wd};
    for (Complex v : w)
        if (v == Complex(0.0, 0.0))
            throw std::domain_error("crossing potential needs nonzero quadrant variables");
    Complex W = 0.0;
    for (const auto& t : detail::kPotentialTerms)
        W += double(t.coeff) * dilog(detail::term_argument(t, w));
    W += clog(wb / wa) * clog(wd / wa) - pi2_6;
    return sign > 0 ? W : -W;
}

inline Complex potential(const OrientedDiagram& d, const std::vector<Complex>& w) {
    if (int(w.size()) != d.face_count())
        throw std::runtime_error("potential needs a value on every face");
    Complex W = 0.0;
    for (const Crossing& c : d.crossings)
        W += crossing_potential(c.sign, w[c.quad[0]], w[c.quad[1]], w[c.quad[2]], w[c.quad[3]]);
    return W;
}

// g_k = w_k dW/dw_k, the log-derivative per face. A dilog term c Li2(u) with
// u multiplicative in the w's contributes -c log(1-u) to each numerator slot
// and +c log(1-u) to each denominator slot; the log product contributes
// log(wd/wa) at b, log(wb/wa) at d and minus their sum at a.
inline std::vector<Complex> potential_gradient(const OrientedDiagram& d,
                                               const std::vector<Complex>& w) {
    if (int(w.size()) != d.face_count())
        throw std::runtime_error("gradient needs a value on every face");
    std::vector<Complex> g(d.face_count(), Complex(0.0, 0.0));
    for (const Crossing& c : d.crossings) {
        std::array<Complex, 4> q{w[c.quad[0]], w[c.quad[1]], w[c.quad[2]], w[c.quad[3]]};
        for (Complex v : q)
            if (v == Complex(0.0, 0.0))
                throw std::domain_error("gradient needs nonzero quadrant variables");
        double s = c.sign > 0 ? 1.0 : -1.0;
        for (const auto& t : detail::kPotentialTerms) {
            Complex u = detail::term_argument(t, q);
            if (std::abs(1.0 - u) < 1e-12)
                throw std::domain_error("dilogarithm argument at the branch point 1");
            Complex L = clog(1.0 - u);
            for (int i = 0; i < t.factors; ++i) {
                g[c.quad[t.num[i]]] += s * double(t.coeff) * (-L);
                g[c.quad[t.den[i]]] -= s * double(t.coeff) * (-L);
            }
        }
        Complex lb = clog(q[1] / q[0]), ld = clog(q[3] / q[0]);
        g[c.quad[1]] += s * ld;
        g[c.quad[3]] += s * lb;
        g[c.quad[0]] -= s * (lb + ld);
    }
    return g;
}

inline std::vector<double> hyperbolicity_residuals(const OrientedDiagram& d,
                                                   const std::vector<Complex>& w) {
    std::vector<double> r;
    for (Complex gk : potential_gradient(d, w)) r.push_back(std::abs(std::exp(gk) - 1.0));
    return r;
}

inline double max_residual(const OrientedDiagram& d, const std::vector<Complex>& w) {
    double m = 0.0;
    for (double r : hyperbolicity_residuals(d, w)) m = std::max(m, r);
    return m;
}

// The closed-form solution w_k = det2(p, s_k); nonzero by the p-condition.
template <class K>
std::vector<K> solution_from_shadow(const ShadowColoring<K>& sh) {
    std::vector<K> w;
    for (const ParabolicVec<K>& s : sh.regions) {
        K v = det2(sh.p, s);
        if (ScalarOps<K>::is_zero(v, 1e-12))
            throw std::domain_error("det2(p, s_k) vanishes; the base vector is not generic");
        w.push_back(v);
    }
    return w;
}

struct W0Result {
    Complex value;
    double max_residual = 0.0;
    double integrality_defect = 0.0;  // max |g_k/(2 pi i) - nearest integer|
    bool residual_ok = false;
};

// W0 = W - sum g_k log w_k. Away from a solution of exp(g_k) = 1 the value
// is still returned but flagged, so exploratory evaluation never throws.
inline W0Result w0_value(const OrientedDiagram& d, const std::vector<Complex>& w,
                         double tol = 1e-9) {
    std::vector<Complex> g = potential_gradient(d, w);
    W0Result out;
    Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
    for (Complex gk : g) {
        out.max_residual = std::max(out.max_residual, std::abs(std::exp(gk) - 1.0));
        Complex m = gk / two_pi_i;
        out.integrality_defect =
            std::max(out.integrality_defect, std::abs(m - std::round(m.real())));
    }
    out.residual_ok = out.max_residual < tol;
    Complex W = potential(d, w);
    for (int k = 0; k < int(w.size()); ++k) W -= g[k] * clog(w[k]);
    out.value = W;
    return out;
}

// Representative of cs in (-pi^2/2, pi^2/2].
inline double reduce_mod_pi_squared(double v) {
    double p2 = std::numbers::pi * std::numbers::pi;
    v -= p2 * std::floor(v / p2);
    if (v > p2 / 2.0) v -= p2;
    return v;
}

struct ComplexVolume {
    Complex w0;
    double vol = 0.0;
    double cs = 0.0;
    double max_residual = 0.0;
    bool residual_ok = false;
};

inline ComplexVolume complex_volume(const ShadowColoring<Complex>& sh, double tol = 1e-9) {
    verify_shadow(sh, tol);
    std::vector<Complex> w = solution_from_shadow(sh);
    W0Result r = w0_value(sh.arc.diagram, w, tol);
    ComplexVolume out;
    out.w0 = r.value;
    out.vol = r.value.imag();
    out.cs = reduce_mod_pi_squared(-r.value.real());
    out.max_residual = r.max_residual;
    out.residual_ok = r.residual_ok;
    return out;
}

}  // namespace knotsum
