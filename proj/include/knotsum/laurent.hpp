#pragma once

// Laurent polynomials in one variable t over a scalar field K, plus the two
// determinant engines used for Alexander matrices: fraction-free Bareiss
// elimination in exact mode and evaluation-interpolation on a circle in
// floating mode.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "exact.hpp"

namespace knotsum {

template <class K>
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const K& v) { set(0, v); }
    static Laurent monomial(int e, const K& v) {
        Laurent p;
        p.set(e, v);
        return p;
    }
    static Laurent t(int e = 1) { return monomial(e, ScalarOps<K>::one()); }

    const std::map<int, K>& coeffs() const { return c_; }
    K coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? ScalarOps<K>::zero() : it->second;
    }
    void set(int e, const K& v) {
        if (ScalarOps<K>::is_zero(v, 0.0))
            c_.erase(e);
        else
            c_[e] = v;
    }

    bool is_zero() const { return c_.empty(); }
    int min_deg() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no degree");
        return c_.begin()->first;
    }
    int max_deg() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no degree");
        return c_.rbegin()->first;
    }
    double sup_norm() const {
        double m = 0.0;
        for (auto& [e, v] : c_) m = std::max(m, ScalarOps<K>::magnitude(v));
        return m;
    }

    Laurent pruned(double tol) const {
        Laurent p;
        for (auto& [e, v] : c_)
            if (ScalarOps<K>::magnitude(v) > tol) p.c_[e] = v;
        return p;
    }
    Laurent shifted(int by) const {
        Laurent p;
        for (auto& [e, v] : c_) p.c_[e + by] = v;
        return p;
    }

    Laurent operator-() const {
        Laurent p;
        for (auto& [e, v] : c_) p.c_[e] = -v;
        return p;
    }
    friend Laurent operator+(const Laurent& x, const Laurent& y) {
        Laurent p = x;
        for (auto& [e, v] : y.c_) p.set(e, p.coeff(e) + v);
        return p;
    }
    friend Laurent operator-(const Laurent& x, const Laurent& y) {
        Laurent p = x;
        for (auto& [e, v] : y.c_) p.set(e, p.coeff(e) - v);
        return p;
    }
    friend Laurent operator*(const Laurent& x, const Laurent& y) {
        Laurent p;
        for (auto& [ex, vx] : x.c_)
            for (auto& [ey, vy] : y.c_) p.set(ex + ey, p.coeff(ex + ey) + vx * vy);
        return p;
    }
    friend Laurent operator*(const K& s, const Laurent& y) {
        Laurent p;
        for (auto& [e, v] : y.c_) p.set(e, s * v);
        return p;
    }
    bool operator==(const Laurent&) const = default;

    K eval(const K& t) const {
        K acc = ScalarOps<K>::zero();
        for (auto& [e, v] : c_) {
            K tp = ScalarOps<K>::one();
            for (int i = 0; i < std::abs(e); ++i) tp = tp * t;
            if (e < 0) tp = ScalarOps<K>::one() / tp;
            acc = acc + v * tp;
        }
        return acc;
    }

private:
    std::map<int, K> c_;  // exponent -> coefficient, exact zeros never stored
};

template <class K>
struct ScalarOps<Laurent<K>> {
    static constexpr bool exact = ScalarOps<K>::exact;
    static Laurent<K> zero() { return {}; }
    static Laurent<K> one() { return Laurent<K>(ScalarOps<K>::one()); }
    static bool is_zero(const Laurent<K>& p, double tol) {
        return p.pruned(tol).is_zero();
    }
    static double magnitude(const Laurent<K>& p) { return p.sup_norm(); }
};

inline Laurent<std::complex<double>> to_complex(const Laurent<Cyclotomic>& p, Root root) {
    Laurent<std::complex<double>> out;
    for (auto& [e, v] : p.coeffs()) out.set(e, to_complex(v, root));
    return out;
}

// Long division num = q den + r with deg r < deg den after aligning both
// minimum degrees at zero; exact over exact scalars.
template <class K>
struct LaurentDivision {
    Laurent<K> quotient, remainder;
    double remainder_norm = 0.0;
};

template <class K>
LaurentDivision<K> divide(const Laurent<K>& num, const Laurent<K>& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    LaurentDivision<K> out;
    if (num.is_zero()) return out;
    int nmin = num.min_deg(), dmin = den.min_deg();
    int nd = num.max_deg() - nmin, dd = den.max_deg() - dmin;
    std::vector<K> rv(nd + 1, ScalarOps<K>::zero()), dv(dd + 1, ScalarOps<K>::zero());
    for (auto& [e, v] : num.coeffs()) rv[e - nmin] = v;
    for (auto& [e, v] : den.coeffs()) dv[e - dmin] = v;
    std::vector<K> qv(std::max(0, nd - dd) + 1, ScalarOps<K>::zero());
    for (int i = nd; i >= dd; --i) {
        K f = rv[i] / dv[dd];
        qv[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rv[i - dd + j] = rv[i - dd + j] - f * dv[j];
        rv[i] = ScalarOps<K>::zero();
    }
    for (int i = 0; i <= nd; ++i) out.remainder.set(i + nmin, rv[i]);
    for (int i = 0; i < int(qv.size()); ++i) out.quotient.set(i + nmin - dmin, qv[i]);
    out.remainder_norm = out.remainder.sup_norm();
    return out;
}

// Representative of the +-t^k unit orbit: minimum degree shifted to zero and
// the leading coefficient made nonnegative (exact scalars: positive in the
// coefficient order; floating: positive real part, ties by imaginary part).
template <class K>
Laurent<K> canonicalize(const Laurent<K>& p, double tol = 1e-9) {
    double cutoff = ScalarOps<K>::exact ? 0.0 : tol * std::max(1.0, p.sup_norm());
    Laurent<K> q = p.pruned(cutoff);
    if (q.is_zero()) return q;
    q = q.shifted(-q.min_deg());
    K lead = q.coeff(q.max_deg());
    bool flip;
    if constexpr (ScalarOps<K>::exact) {
        flip = lead < K(0);
    } else {
        flip = lead.real() < 0.0 || (lead.real() == 0.0 && lead.imag() < 0.0);
    }
    return flip ? -q : q;
}

// Equality in the quotient by units +-t^k, robust to the sign rule: compares
// the min-degree-aligned polynomials both ways.
template <class K>
bool equal_up_to_unit(const Laurent<K>& x, const Laurent<K>& y, double tol = 1e-9) {
    auto cutoff = [&](const Laurent<K>& p) {
        return ScalarOps<K>::exact ? 0.0 : tol * std::max(1.0, p.sup_norm());
    };
    Laurent<K> a = x.pruned(cutoff(x)), b = y.pruned(cutoff(y));
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    a = a.shifted(-a.min_deg());
    b = b.shifted(-b.min_deg());
    if constexpr (ScalarOps<K>::exact) {
        return a == b || a == -b;
    } else {
        double scale = std::max({1.0, a.sup_norm(), b.sup_norm()});
        return (a - b).sup_norm() <= tol * scale || (a + b).sup_norm() <= tol * scale;
    }
}

template <class K>
struct LaurentMatrix {
    int rows = 0, cols = 0;
    std::vector<Laurent<K>> entries;  // row major

    LaurentMatrix() = default;
    LaurentMatrix(int r, int c) : rows(r), cols(c), entries(r * c) {}
    Laurent<K>& at(int i, int j) { return entries[i * cols + j]; }
    const Laurent<K>& at(int i, int j) const { return entries[i * cols + j]; }

    LaurentMatrix without_columns(int j0, int j1) const {
        LaurentMatrix m(rows, cols - 2);
        for (int i = 0; i < rows; ++i) {
            int jj = 0;
            for (int j = 0; j < cols; ++j)
                if (j != j0 && j != j1) m.at(i, jj++) = at(i, j);
        }
        return m;
    }
};

namespace detail {

template <class K>
Laurent<K> exact_quotient(const Laurent<K>& num, const Laurent<K>& den) {
    auto d = divide(num, den);
    if (!d.remainder.is_zero())
        throw std::logic_error("fraction-free elimination produced an inexact division");
    return d.quotient;
}

// Bareiss fraction-free elimination; every division is exact in the
// polynomial ring over an exact field.
template <class K>
Laurent<K> det_bareiss(LaurentMatrix<K> m) {
    int n = m.rows;
    int sign = 1;
    Laurent<K> prev = Laurent<K>(ScalarOps<K>::one());
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n && swap < 0; ++i)
                if (!m.at(i, k).is_zero()) swap = i;
            if (swap < 0) return {};
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_quotient(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j),
                                            prev);
        prev = m.at(k, k);
    }
    Laurent<K> det = m.at(n - 1, n - 1);
    return sign > 0 ? det : -det;
}

inline std::complex<double> det_numeric(std::vector<std::vector<std::complex<double>>> a) {
    using C = std::complex<double>;
    int n = int(a.size());
    C det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (std::abs(a[piv][k]) == 0.0) return 0.0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < n; ++i) {
            C f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

// Samples the determinant on the circle |t| = 0.8 and recovers coefficients
// by a discrete Fourier transform over the known degree window; the window
// gets four spare sample points and the reconstruction residual is checked.
inline Laurent<std::complex<double>> det_interpolate(
    const LaurentMatrix<std::complex<double>>& m, double check_tol) {
    using C = std::complex<double>;
    int n = m.rows;
    if (n == 0) return Laurent<C>(C(1.0));
    long min_tot = 0, max_tot = 0;
    for (int i = 0; i < n; ++i) {
        bool any = false;
        int rmin = 0, rmax = 0;
        for (int j = 0; j < n; ++j) {
            const auto& p = m.at(i, j);
            if (p.is_zero()) continue;
            if (!any) {
                rmin = p.min_deg();
                rmax = p.max_deg();
                any = true;
            } else {
                rmin = std::min(rmin, p.min_deg());
                rmax = std::max(rmax, p.max_deg());
            }
        }
        if (!any) return {};
        min_tot += rmin;
        max_tot += rmax;
    }
    int window = int(max_tot - min_tot);
    int ns = window + 4;
    double radius = 0.8;
    std::vector<C> samples(ns);
    for (int s = 0; s < ns; ++s) {
        double theta = 2.0 * std::numbers::pi * double(s) / double(ns);
        C t = std::polar(radius, theta);
        std::vector<std::vector<C>> a(n, std::vector<C>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j).eval(t);
        samples[s] = det_numeric(std::move(a));
    }
    Laurent<C> det;
    for (long e = min_tot; e <= max_tot; ++e) {
        C acc = 0.0;
        for (int s = 0; s < ns; ++s) {
            double theta = -2.0 * std::numbers::pi * double(e) * double(s) / double(ns);
            acc += samples[s] * std::polar(1.0, theta);
        }
        det.set(int(e), acc / (double(ns) * std::pow(radius, double(e))));
    }
    double scale = 1.0, worst = 0.0;
    for (const C& f : samples) scale = std::max(scale, std::abs(f));
    for (int s = 0; s < ns; ++s) {
        double theta = 2.0 * std::numbers::pi * double(s) / double(ns);
        C t = std::polar(radius, theta);
        worst = std::max(worst, std::abs(det.eval(t) - samples[s]));
    }
    if (worst > check_tol * scale)
        throw ToleranceError("determinant interpolation residual too large");
    return det;
}

}  // namespace detail

template <class K>
Laurent<K> det_laurent(const LaurentMatrix<K>& m, double check_tol = 1e-8) {
    if (m.rows != m.cols) throw std::domain_error("determinant of a non-square matrix");
    if (m.rows == 0) return Laurent<K>(ScalarOps<K>::one());
    if constexpr (ScalarOps<K>::exact) {
        (void)check_tol;
        return detail::det_bareiss(m);
    } else {
        return detail::det_interpolate(m, check_tol);
    }
}

}  // namespace knotsum
