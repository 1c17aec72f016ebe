#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <knotsum/laurent.hpp>

#include "support/oracles.hpp"

using namespace knotsum;

namespace {

std::mt19937 rng(15u);

Laurent<Complex> random_poly(int terms, int max_exp) {
    std::uniform_int_distribution<int> de(-max_exp, max_exp);
    std::uniform_real_distribution<double> dc(-2.0, 2.0);
    Laurent<Complex> p;
    for (int i = 0; i < terms; ++i) p.set(de(rng), Complex(dc(rng), dc(rng)));
    return p;
}

Laurent<Cyclotomic> random_exact_poly(int terms, int max_exp) {
    std::uniform_int_distribution<int> de(-max_exp, max_exp);
    std::uniform_int_distribution<long long> dc(-5, 5);
    Laurent<Cyclotomic> p;
    for (int i = 0; i < terms; ++i)
        p.set(de(rng), Cyclotomic(Rational(dc(rng)), Rational(dc(rng))));
    return p;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
    Laurent<Cyclotomic> p;
    p.set(3, Cyclotomic(2));
    p.set(3, Cyclotomic(0));
    CHECK(p.is_zero());
    Laurent<Cyclotomic> q = Laurent<Cyclotomic>::t() - Laurent<Cyclotomic>::t();
    CHECK(q.is_zero());
    CHECK_THROWS_AS(q.min_deg(), std::domain_error);
}

TEST_CASE("ring identities on random polynomials") {
    for (int i = 0; i < 200; ++i) {
        Laurent<Cyclotomic> a = random_exact_poly(4, 5);
        Laurent<Cyclotomic> b = random_exact_poly(4, 5);
        Laurent<Cyclotomic> c = random_exact_poly(4, 5);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        CHECK(a.shifted(3) == Laurent<Cyclotomic>::t(3) * a);
    }
}

TEST_CASE("division reassembles numerator from quotient and remainder") {
    for (int i = 0; i < 200; ++i) {
        Laurent<Cyclotomic> num = random_exact_poly(5, 6);
        Laurent<Cyclotomic> den = random_exact_poly(3, 3);
        if (den.is_zero()) continue;
        auto d = divide(num, den);
        CHECK(d.quotient * den + d.remainder == num);
        Laurent<Cyclotomic> exact = num * den;
        auto e = divide(exact, den);
        CHECK(e.remainder.is_zero());
        CHECK(e.quotient == num);
    }
    CHECK_THROWS_AS(divide(random_exact_poly(3, 3), Laurent<Cyclotomic>()),
                    std::domain_error);
}

TEST_CASE("canonical form starts at degree zero with a positive lead") {
    Laurent<Cyclotomic> p;
    p.set(2, Cyclotomic(1));
    p.set(4, Cyclotomic(-3));
    Laurent<Cyclotomic> c = canonicalize(p);
    CHECK(c.min_deg() == 0);
    CHECK(canonicalize(-p.shifted(-7)) == c);
    Laurent<Complex> f = random_poly(4, 4);
    Laurent<Complex> unit = Laurent<Complex>::monomial(3, Complex(-1.0, 0.0));
    CHECK(equal_up_to_unit(canonicalize(unit * f), canonicalize(f)));
}

TEST_CASE("unit equivalence accepts unit multiples and rejects perturbations") {
    Laurent<Complex> f = random_poly(5, 4);
    Laurent<Complex> shifted = Laurent<Complex>::monomial(-5, Complex(-1.0, 0.0)) * f;
    CHECK(equal_up_to_unit(f, shifted));
    Laurent<Complex> g = f;
    g.set(0, g.coeff(0) + Complex(1e-3, 0.0));
    CHECK_FALSE(equal_up_to_unit(f, g, 1e-6));
    CHECK(equal_up_to_unit(Laurent<Complex>(), Laurent<Complex>()));
    CHECK_FALSE(equal_up_to_unit(f, Laurent<Complex>()));
}

TEST_CASE("determinant of a diagonal unit matrix is one") {
    LaurentMatrix<Cyclotomic> m(2, 2);
    m.at(0, 0) = Laurent<Cyclotomic>::t(1);
    m.at(1, 1) = Laurent<Cyclotomic>::t(-1);
    CHECK(det_laurent(m) == Laurent<Cyclotomic>(Cyclotomic(1)));

    LaurentMatrix<Complex> f(2, 2);
    f.at(0, 0) = Laurent<Complex>::t(1);
    f.at(1, 1) = Laurent<Complex>::t(-1);
    CHECK(equal_up_to_unit(det_laurent(f), Laurent<Complex>(Complex(1.0, 0.0))));
}

TEST_CASE("both determinant engines agree with cofactor expansion") {
    for (int i = 0; i < 50; ++i) {
        LaurentMatrix<Complex> m(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m.at(r, c) = random_poly(2, 2);
        Laurent<Complex> fast = det_laurent(m);
        Laurent<Complex> slow = oracle::det_cofactor(m);
        double scale = std::max(1.0, slow.sup_norm());
        CHECK((fast - slow).sup_norm() < 1e-9 * scale);
    }
    for (int i = 0; i < 30; ++i) {
        LaurentMatrix<Cyclotomic> m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = random_exact_poly(2, 2);
        CHECK(det_laurent(m) == oracle::det_cofactor(m));
    }
}

TEST_CASE("determinant is alternating and vanishes on repeated rows") {
    LaurentMatrix<Cyclotomic> m(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = random_exact_poly(2, 2);
    LaurentMatrix<Cyclotomic> swapped = m;
    for (int c = 0; c < 3; ++c) std::swap(swapped.at(0, c), swapped.at(2, c));
    CHECK(det_laurent(swapped) == -det_laurent(m));

    LaurentMatrix<Cyclotomic> rep = m;
    for (int c = 0; c < 3; ++c) rep.at(2, c) = rep.at(0, c);
    CHECK(det_laurent(rep).is_zero());

    LaurentMatrix<Complex> fr(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) fr.at(r, c) = random_poly(2, 2);
    for (int c = 0; c < 3; ++c) fr.at(2, c) = fr.at(0, c);
    Laurent<Complex> dz = det_laurent(fr);
    CHECK(dz.pruned(1e-9 * std::max(1.0, dz.sup_norm())).is_zero());
}

TEST_CASE("column removal keeps the other columns in order") {
    LaurentMatrix<Cyclotomic> m(2, 4);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = Laurent<Cyclotomic>(Cyclotomic(10 * r + c));
    LaurentMatrix<Cyclotomic> cut = m.without_columns(1, 2);
    REQUIRE(cut.cols == 2);
    CHECK(cut.at(0, 0) == m.at(0, 0));
    CHECK(cut.at(0, 1) == m.at(0, 3));
    CHECK(cut.at(1, 1) == m.at(1, 3));
}
