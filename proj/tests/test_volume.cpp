#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numbers>
#include <random>

#include <knotsum/fixtures.hpp>
#include <knotsum/volume.hpp>

#include "support/oracles.hpp"

using namespace knotsum;

namespace {

constexpr double kPi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
constexpr double kVol41 = 2.029883212819307;

Cyclotomic cyc(long long u, long long v) { return {Rational(u), Rational(v)}; }

double wrap_pi2(double v) {
    double p2 = std::numbers::pi * std::numbers::pi;
    return v - p2 * std::round(v / p2);
}

std::vector<Cyclotomic> sorted_w(const char* name) {
    std::vector<Cyclotomic> w = solution_from_shadow(builtin_shadow(name));
    std::sort(w.begin(), w.end());
    return w;
}

}  // namespace

TEST_CASE("quadrant solutions match the frozen multisets") {
    std::vector<Cyclotomic> w31 = {cyc(-3, 0), cyc(-1, 0), cyc(-1, 0), cyc(5, 0), cyc(6, 0)};
    std::vector<Cyclotomic> w41 = {cyc(5, 0), cyc(6, 0), cyc(1, -4),
                                   cyc(-2, -8), cyc(3, -9), cyc(3, -7)};
    std::vector<Cyclotomic> wc = {cyc(-3, 0), cyc(-1, 0), cyc(-1, 0),
                                  cyc(5, 0), cyc(6, 0), cyc(1, -4),
                                  cyc(-2, -8), cyc(3, -9), cyc(3, -7)};
    std::sort(w31.begin(), w31.end());
    std::sort(w41.begin(), w41.end());
    std::sort(wc.begin(), wc.end());
    CHECK(sorted_w("3_1") == w31);
    CHECK(sorted_w("4_1") == w41);
    CHECK(sorted_w("3_1#4_1") == wc);
}

TEST_CASE("fixture solutions satisfy the hyperbolicity equations") {
    for (const char* name : {"3_1", "4_1", "3_1#4_1"}) {
        for (Root r : {Root::minus_i, Root::plus_i}) {
            ShadowColoring<Complex> sh = to_complex(builtin_shadow(name), r);
            CHECK(max_residual(sh.arc.diagram, solution_from_shadow(sh)) < 1e-12);
        }
    }
}

TEST_CASE("perturbed solutions are flagged") {
    ShadowColoring<Complex> sh = to_complex(builtin_shadow("4_1"), Root::minus_i);
    std::vector<Complex> w = solution_from_shadow(sh);
    w[2] += 1e-3;
    CHECK(max_residual(sh.arc.diagram, w) > 1e-6);
}

TEST_CASE("zero quadrant variables are rejected") {
    CHECK_THROWS_AS(crossing_potential(1, 0.0, {1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}),
                    std::domain_error);
}

TEST_CASE("mirroring a crossing negates its potential") {
    Complex wa{1.3, 0.2}, wb{-0.7, 1.1}, wc{2.2, -0.4}, wd{0.5, 0.9};
    CHECK(std::abs(crossing_potential(1, wa, wb, wc, wd) +
                   crossing_potential(-1, wa, wb, wc, wd)) < 1e-14);
}

TEST_CASE("gradient agrees with central differences near the solutions") {
    std::mt19937 rng(9u);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (const char* name : {"3_1", "4_1", "3_1#4_1"}) {
        ShadowColoring<Complex> sh = to_complex(builtin_shadow(name), Root::minus_i);
        const OrientedDiagram& dg = sh.arc.diagram;
        std::vector<Complex> base = solution_from_shadow(sh);
        int accepted = 0;
        double worst = 0.0;
        while (accepted < 25) {
            std::vector<Complex> w = base;
            for (Complex& v : w) v *= std::exp(Complex(0.2 * d(rng), 0.2 * d(rng)));
            std::vector<Complex> g;
            try {
                g = potential_gradient(dg, w);
            } catch (const std::domain_error&) {
                continue;  // the draw landed on a cut; try another
            }
            ++accepted;
            for (int k = 0; k < dg.face_count(); ++k) {
                double h = 1e-6 * std::abs(w[k]);
                Complex fd = oracle::fd_gradient(dg, w, k, h);
                Complex an = g[k] / w[k];
                worst = std::max(worst, std::abs(fd - an) / std::max(1.0, std::abs(an)));
            }
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("complex volumes of the fixtures") {
    for (Root r : {Root::minus_i, Root::plus_i}) {
        double sgn = r == Root::minus_i ? 1.0 : -1.0;
        ComplexVolume v31 = complex_volume(to_complex(builtin_shadow("3_1"), r));
        CHECK(v31.residual_ok);
        CHECK(std::abs(v31.vol) < 1e-9);
        CHECK(std::abs(wrap_pi2(v31.cs - kPi2_6)) < 1e-9);

        ComplexVolume v41 = complex_volume(to_complex(builtin_shadow("4_1"), r));
        CHECK(v41.residual_ok);
        CHECK(std::abs(v41.vol - sgn * kVol41) < 1e-9);
        CHECK(std::abs(wrap_pi2(v41.cs)) < 1e-9);

        ComplexVolume vc = complex_volume(to_complex(builtin_shadow("3_1#4_1"), r));
        CHECK(vc.residual_ok);
        CHECK(std::abs(vc.vol - sgn * kVol41) < 1e-9);
        CHECK(std::abs(wrap_pi2(vc.cs - kPi2_6)) < 1e-9);
    }
}

TEST_CASE("volume and Chern-Simons terms add under connected sum") {
    for (Root r : {Root::minus_i, Root::plus_i}) {
        ComplexVolume a = complex_volume(to_complex(builtin_shadow("3_1"), r));
        ComplexVolume b = complex_volume(to_complex(builtin_shadow("4_1"), r));
        ComplexVolume c = complex_volume(to_complex(builtin_shadow("3_1#4_1"), r));
        CHECK(std::abs(c.vol - a.vol - b.vol) < 1e-9);
        CHECK(std::abs(wrap_pi2(c.cs - a.cs - b.cs)) < 1e-9);
    }
}

TEST_CASE("the invariants do not depend on the chosen shadow") {
    ArcColoring<Complex> c = to_complex(builtin_coloring("4_1"), Root::minus_i);
    ComplexVolume fixture = complex_volume(to_complex(builtin_shadow("4_1"), Root::minus_i));
    ComplexVolume searched = complex_volume(find_generic_shadow(c));
    CHECK(std::abs(searched.vol - fixture.vol) < 1e-9);
    CHECK(std::abs(wrap_pi2(searched.cs - fixture.cs)) < 1e-9);
}

TEST_CASE("rescaling the base vector moves w but not the invariants") {
    ShadowColoring<Complex> sh = to_complex(builtin_shadow("3_1#4_1"), Root::minus_i);
    ComplexVolume before = complex_volume(sh);
    sh.p.alpha *= 3.0;
    sh.p.beta *= 3.0;
    ComplexVolume after = complex_volume(sh);
    CHECK(std::abs(after.vol - before.vol) < 1e-9);
    CHECK(std::abs(wrap_pi2(after.cs - before.cs)) < 1e-9);
}
