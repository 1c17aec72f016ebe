#pragma once

// Parabolic SL(2,C) elements as column vectors (alpha, beta) up to sign.
// to_matrix sends (alpha, beta) to the unipotent matrix with that fixed
// vector; the quandle operation a * b conjugates a by to_matrix(b), which on
// representatives is just a matrix-vector product.

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "exact.hpp"

namespace knotsum {

template <class K>
struct Mat2 {
    K a, b, c, d;  // row major: [[a, b], [c, d]]

    static Mat2 identity() {
        return {ScalarOps<K>::one(), ScalarOps<K>::zero(),
                ScalarOps<K>::zero(), ScalarOps<K>::one()};
    }
    K det() const { return a * d - b * c; }
    K trace() const { return a + d; }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend Mat2 operator+(const Mat2& m, const Mat2& n) {
        return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
    }
    friend Mat2 operator-(const Mat2& m, const Mat2& n) {
        return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
    }
    friend Mat2 operator*(const K& s, const Mat2& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }
    // Adjugate divided by determinant; exact for SL2 inputs.
    Mat2 inverse() const {
        K dt = det();
        if (ScalarOps<K>::is_zero(dt, 0.0)) throw std::domain_error("singular 2x2 matrix");
        K inv = ScalarOps<K>::one() / dt;
        return {inv * d, inv * -b, inv * -c, inv * a};
    }
};

template <class K>
struct ParabolicVec {
    K alpha, beta;

    bool is_valid(double tol = 0.0) const {
        return !(ScalarOps<K>::is_zero(alpha, tol) && ScalarOps<K>::is_zero(beta, tol));
    }
    ParabolicVec operator-() const { return {-alpha, -beta}; }
    bool operator==(const ParabolicVec&) const = default;
};

template <class K>
Mat2<K> to_matrix(const ParabolicVec<K>& v) {
    K one = ScalarOps<K>::one();
    K ab = v.alpha * v.beta;
    return {one + ab, -(v.alpha * v.alpha), v.beta * v.beta, one - ab};
}

// to_matrix(v) has trace 2 and det 1, so its inverse is 2I - M.
template <class K>
Mat2<K> parabolic_inverse(const Mat2<K>& m) {
    K two = ScalarOps<K>::one() + ScalarOps<K>::one();
    return {two - m.a, -m.b, -m.c, two - m.d};
}

template <class K>
ParabolicVec<K> act(const Mat2<K>& m, const ParabolicVec<K>& v) {
    return {m.a * v.alpha + m.b * v.beta, m.c * v.alpha + m.d * v.beta};
}

template <class K>
ParabolicVec<K> quandle_mul(const ParabolicVec<K>& a, const ParabolicVec<K>& b) {
    return act(to_matrix(b), a);
}

template <class K>
ParabolicVec<K> quandle_div(const ParabolicVec<K>& a, const ParabolicVec<K>& b) {
    return act(parabolic_inverse(to_matrix(b)), a);
}

// det2(u, v) = alpha_u beta_v - beta_u alpha_v. Vanishes iff u, v define the
// same point of CP^1 (equal Hopf images).
template <class K>
K det2(const ParabolicVec<K>& u, const ParabolicVec<K>& v) {
    return u.alpha * v.beta - u.beta * v.alpha;
}

template <class K>
double vec_magnitude(const ParabolicVec<K>& v) {
    double x = ScalarOps<K>::magnitude(v.alpha);
    double y = ScalarOps<K>::magnitude(v.beta);
    return std::sqrt(x * x + y * y);
}

// Chordal distance between the Hopf images on CP^1; 0 iff equal points.
// Computed homogeneously so beta = 0 (the point at infinity) needs no case.
inline double chordal_distance(const ParabolicVec<std::complex<double>>& u,
                               const ParabolicVec<std::complex<double>>& v) {
    double num = 2.0 * std::abs(det2(u, v));
    double den = vec_magnitude(u) * vec_magnitude(v);
    if (den == 0.0) throw std::domain_error("chordal distance of zero vector");
    return num / den;
}

// Distinct projective points: exact mode tests det2 != 0, floating mode uses
// the chordal distance against tol.
template <class K>
bool hopf_distinct(const ParabolicVec<K>& u, const ParabolicVec<K>& v, double tol) {
    if constexpr (ScalarOps<K>::exact) {
        (void)tol;
        return !det2(u, v).is_zero();
    } else {
        return chordal_distance(u, v) > tol;
    }
}

template <class K>
bool vec_equal_up_to_sign(const ParabolicVec<K>& u, const ParabolicVec<K>& v,
                          double tol = 1e-9) {
    if constexpr (ScalarOps<K>::exact) {
        return (u.alpha == v.alpha && u.beta == v.beta) ||
               (u.alpha == -v.alpha && u.beta == -v.beta);
    } else {
        auto err = [&](const ParabolicVec<K>& w) {
            return std::max(ScalarOps<K>::magnitude(u.alpha - w.alpha),
                            ScalarOps<K>::magnitude(u.beta - w.beta));
        };
        double scale = std::max(1.0, vec_magnitude(u));
        return std::min(err(v), err(-v)) <= tol * scale;
    }
}

// Completes s to an SL2 basis [s | s_perp] with det(s, s_perp) = 1.
template <class K>
ParabolicVec<K> unit_complement(const ParabolicVec<K>& s) {
    bool use_alpha;
    if constexpr (ScalarOps<K>::exact) {
        use_alpha = !s.alpha.is_zero();
    } else {
        use_alpha = ScalarOps<K>::magnitude(s.alpha) >= ScalarOps<K>::magnitude(s.beta);
    }
    if (use_alpha) return {ScalarOps<K>::zero(), ScalarOps<K>::one() / s.alpha};
    return {-(ScalarOps<K>::one() / s.beta), ScalarOps<K>::zero()};
}

// One SL2 matrix with g src = dst (both assumed nonzero).
template <class K>
Mat2<K> transporter(const ParabolicVec<K>& src, const ParabolicVec<K>& dst) {
    ParabolicVec<K> sp = unit_complement(src);
    ParabolicVec<K> dp = unit_complement(dst);
    // columns [dst | dp] times inverse of columns [src | sp]; both have det 1
    Mat2<K> d{dst.alpha, dp.alpha, dst.beta, dp.beta};
    Mat2<K> s{src.alpha, sp.alpha, src.beta, sp.beta};
    return d * Mat2<K>{s.d, -s.b, -s.c, s.a};
}

// The full solution set of g to_matrix(src) g^-1 = to_matrix(dst) is the pair
// of one-parameter families g0 (I + tau src src^T J) with g0 src = +-dst,
// i.e. g(tau) = g0 + tau (+-dst) src^T J. The canonical member minimizes
// ||g - I||_F over both families; ties prefer the +dst family.
struct ConjugatorFamily {
    Mat2<std::complex<double>> base;       // g0
    Mat2<std::complex<double>> direction;  // d/dtau g(tau)
};

inline ConjugatorFamily conjugator_family(const ParabolicVec<std::complex<double>>& src,
                                          const ParabolicVec<std::complex<double>>& dst) {
    Mat2<std::complex<double>> g0 = transporter(src, dst);
    // dst src^T J with J = [[0,-1],[1,0]]
    Mat2<std::complex<double>> dir{dst.alpha * src.beta, -(dst.alpha * src.alpha),
                                   dst.beta * src.beta, -(dst.beta * src.alpha)};
    return {g0, dir};
}

inline double frobenius_distance_to_identity(const Mat2<std::complex<double>>& g) {
    auto I = Mat2<std::complex<double>>::identity();
    auto d = g - I;
    return std::sqrt(std::norm(d.a) + std::norm(d.b) + std::norm(d.c) + std::norm(d.d));
}

inline Mat2<std::complex<double>> canonical_conjugator(
    const ParabolicVec<std::complex<double>>& src,
    const ParabolicVec<std::complex<double>>& dst) {
    using C = std::complex<double>;
    if (!src.is_valid() || !dst.is_valid())
        throw std::domain_error("conjugator endpoints must be nonzero");
    auto minimize = [](const ConjugatorFamily& f) {
        auto diff = f.base - Mat2<C>::identity();
        // least squares over complex tau: tau = -<dir, diff> / <dir, dir>
        auto dot = [](const Mat2<C>& m, const Mat2<C>& n) {
            return std::conj(m.a) * n.a + std::conj(m.b) * n.b +
                   std::conj(m.c) * n.c + std::conj(m.d) * n.d;
        };
        C dd = dot(f.direction, f.direction);
        C tau = std::abs(dd) == 0.0 ? C{} : -dot(f.direction, diff) / dd;
        return f.base + tau * f.direction;
    };
    Mat2<C> plus = minimize(conjugator_family(src, dst));
    Mat2<C> minus = minimize(conjugator_family(src, -dst));
    double dp = frobenius_distance_to_identity(plus);
    double dm = frobenius_distance_to_identity(minus);
    return dm < dp - 1e-12 ? minus : plus;
}

}  // namespace knotsum
