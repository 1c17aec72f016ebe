#pragma once

// Exact scalars: rationals over int64 and the quadratic extension Q(x) with
// x^2 + x + 1 = 0. Intermediates go through __int128 so fixture-sized inputs
// (small integer coefficients, matrices up to ~12x12) stay far from overflow.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace knotsum {

using Complex = std::complex<double>;

// A mathematical condition failed beyond tolerance (broken coloring, residual
// or remainder too large). Distinct from input errors so callers can map the
// two to different exit codes.
struct ToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    void reduce() { *this = from128(num_, den_); }

    long long num_, den_;
};

// u + v*x where x is a root of x^2 + x + 1 (a primitive cube root of unity).
// Multiplication uses x^2 = -x - 1; the norm u^2 - uv + v^2 gives inverses.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(long long n) : u_(n) {}
    Cyclotomic(Rational u) : u_(u) {}
    Cyclotomic(Rational u, Rational v) : u_(u), v_(v) {}

    static Cyclotomic x() { return Cyclotomic(Rational(0), Rational(1)); }

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        return {a.u_ + b.u_, a.v_ + b.v_};
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        return {a.u_ - b.u_, a.v_ - b.v_};
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        // (u1 + v1 x)(u2 + v2 x) = u1 u2 - v1 v2 + (u1 v2 + v1 u2 - v1 v2) x
        Rational w = a.v_ * b.v_;
        return {a.u_ * b.u_ - w, a.u_ * b.v_ + a.v_ * b.u_ - w};
    }
    Cyclotomic inverse() const {
        Rational n = u_ * u_ - u_ * v_ + v_ * v_;
        if (n.is_zero()) throw std::domain_error("inverse of zero");
        return {(u_ - v_) / n, -v_ / n};
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }
    Cyclotomic operator-() const { return {-u_, -v_}; }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    // Order is lexicographic on (u, v); used only for canonical sign choices.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.u_ != b.u_) return a.u_ < b.u_;
        return a.v_ < b.v_;
    }

    std::string str() const {
        if (v_.is_zero()) return u_.str();
        std::string s = u_.is_zero() ? "" : u_.str();
        if (!s.empty()) s += "+";
        return s + "(" + v_.str() + ")x";
    }

private:
    Rational u_, v_;
};

// Which complex root of x^2+x+1 a floating evaluation uses.
enum class Root { minus_i, plus_i };  // (-1 -+ sqrt(3) i) / 2

inline std::complex<double> root_value(Root r) {
    double s = std::sqrt(3.0) / 2.0;
    return {-0.5, r == Root::minus_i ? -s : s};
}

inline std::complex<double> to_complex(const Cyclotomic& c, Root r) {
    return std::complex<double>(c.u().to_double()) + c.v().to_double() * root_value(r);
}

// Scalar protocol shared by generic code: complex<double> (floating mode)
// and Cyclotomic (exact mode).
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> zero() { return {}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& z, double tol) {
        return std::abs(z) <= tol;
    }
    static double magnitude(const std::complex<double>& z) { return std::abs(z); }
};

template <>
struct ScalarOps<Cyclotomic> {
    static constexpr bool exact = true;
    static Cyclotomic zero() { return {}; }
    static Cyclotomic one() { return Cyclotomic(1); }
    static bool is_zero(const Cyclotomic& z, double) { return z.is_zero(); }
    static double magnitude(const Cyclotomic& z) {
        return std::abs(to_complex(z, Root::minus_i));
    }
};

}  // namespace knotsum
