#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <knotsum/exact.hpp>

using namespace knotsum;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(5, 1).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937 rng(11u);
    std::uniform_int_distribution<long long> d(-40, 40);
    for (int i = 0; i < 500; ++i) {
        Rational a(d(rng), d(rng) == 0 ? 1 : std::abs(d(rng)) + 1);
        Rational b(d(rng), std::abs(d(rng)) + 1);
        Rational c(d(rng), std::abs(d(rng)) + 1);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a / a == Rational(1));
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational order agrees with real values") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK_FALSE(Rational(2, 4) < Rational(1, 2));
}

TEST_CASE("x satisfies its defining polynomial") {
    Cyclotomic x = Cyclotomic::x();
    CHECK((x * x + x + Cyclotomic(1)).is_zero());
    CHECK(x * x * x == Cyclotomic(1));
}

TEST_CASE("cyclotomic inverses and division") {
    Cyclotomic c(Rational(3, 2), Rational(-5, 7));
    CHECK(c * c.inverse() == Cyclotomic(1));
    CHECK(c / c == Cyclotomic(1));
    CHECK_THROWS_AS(Cyclotomic().inverse(), std::domain_error);
}

TEST_CASE("both complex roots satisfy the defining polynomial") {
    for (Root r : {Root::minus_i, Root::plus_i}) {
        Complex z = root_value(r);
        CHECK(std::abs(z * z + z + 1.0) < 1e-15);
    }
    CHECK(std::abs(root_value(Root::minus_i) - std::conj(root_value(Root::plus_i))) == 0.0);
}

TEST_CASE("evaluation is a ring homomorphism at both roots") {
    std::mt19937 rng(12u);
    std::uniform_int_distribution<long long> d(-9, 9);
    for (int i = 0; i < 300; ++i) {
        Cyclotomic a(Rational(d(rng), std::abs(d(rng)) + 1), Rational(d(rng), std::abs(d(rng)) + 1));
        Cyclotomic b(Rational(d(rng), std::abs(d(rng)) + 1), Rational(d(rng), std::abs(d(rng)) + 1));
        for (Root r : {Root::minus_i, Root::plus_i}) {
            CHECK(std::abs(to_complex(a + b, r) - (to_complex(a, r) + to_complex(b, r))) < 1e-12);
            CHECK(std::abs(to_complex(a * b, r) - to_complex(a, r) * to_complex(b, r)) < 1e-12);
            if (!b.is_zero())
                CHECK(std::abs(to_complex(a / b, r) - to_complex(a, r) / to_complex(b, r)) < 1e-10);
        }
    }
}

TEST_CASE("printable forms") {
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Cyclotomic(2).str() == "2");
    CHECK(Cyclotomic(Rational(1), Rational(1)).str() == "1+(1)x");
}
