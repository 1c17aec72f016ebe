#include <catch2/catch_amalgamated.hpp>

#include <knotsum/coloring.hpp>
#include <knotsum/fixtures.hpp>

using namespace knotsum;

namespace {

Cyclotomic cyc(long long u, long long v) { return {Rational(u), Rational(v)}; }

ParabolicVec<Cyclotomic> cvec(long long au, long long av, long long bu, long long bv) {
    return {cyc(au, av), cyc(bu, bv)};
}

}  // namespace

TEST_CASE("fixture colorings verify in both modes") {
    for (const char* name : {"3_1", "4_1", "3_1#4_1"}) {
        ArcColoring<Cyclotomic> c = builtin_coloring(name);
        CHECK(verify_arc_coloring(c).pass);
        for (Root r : {Root::minus_i, Root::plus_i})
            CHECK(verify_arc_coloring(to_complex(c, r)).pass);
    }
}

TEST_CASE("trefoil arc colors are the frozen values") {
    ArcColoring<Cyclotomic> c = builtin_coloring("3_1");
    REQUIRE(int(c.colors.size()) == 3);
    CHECK(c.colors[0] == cvec(-1, 0, 1, 0));
    CHECK(c.colors[1] == cvec(1, 0, 0, 0));
    CHECK(c.colors[2] == cvec(0, 0, 1, 0));
}

TEST_CASE("figure eight arc colors are the frozen values") {
    ArcColoring<Cyclotomic> c = builtin_coloring("4_1");
    REQUIRE(int(c.colors.size()) == 4);
    CHECK(c.colors[0] == cvec(0, 0, 1, 0));
    CHECK(c.colors[1] == cvec(1, 1, 0, 1));
    CHECK(c.colors[2] == cvec(0, 1, 0, 1));
    CHECK(c.colors[3] == cvec(0, 1, 0, 0));
}

TEST_CASE("perturbing one arc breaks only the crossings that touch it") {
    // arc 0 lies in the left summand, so the right summand's crossings stay ok
    ArcColoring<Complex> c = to_complex(builtin_coloring("3_1#4_1"), Root::minus_i);
    c.colors[0].alpha += 1e-4;
    ColoringReport rep = verify_arc_coloring(c, 1e-9);
    CHECK_FALSE(rep.pass);
    int broken = 0;
    for (char ok : rep.crossing_ok) broken += ok ? 0 : 1;
    CHECK(broken > 0);
    CHECK(broken < int(rep.crossing_ok.size()));
    for (int k = 0; k < int(rep.crossing_ok.size()); ++k) {
        const Crossing& cr = c.diagram.crossings[k];
        bool touches = cr.over == 0 || cr.under_in == 0 || cr.under_out == 0;
        if (!touches) CHECK(bool(rep.crossing_ok[k]));
    }
}

TEST_CASE("region propagation rebuilds the fixture shadows from one seed") {
    for (const char* name : {"3_1", "4_1", "3_1#4_1"}) {
        ShadowColoring<Cyclotomic> sh = builtin_shadow(name);
        auto regions = region_coloring(sh.arc, 0, sh.regions[0]);
        REQUIRE(regions.size() == sh.regions.size());
        for (size_t f = 0; f < regions.size(); ++f)
            CHECK(vec_equal_up_to_sign(regions[f], sh.regions[f]));
    }
}

TEST_CASE("region propagation is independent of the seed face") {
    ShadowColoring<Cyclotomic> sh = builtin_shadow("4_1");
    for (FaceId f = 0; f < sh.arc.diagram.face_count(); ++f) {
        auto regions = region_coloring(sh.arc, f, sh.regions[f]);
        for (size_t g = 0; g < regions.size(); ++g)
            CHECK(vec_equal_up_to_sign(regions[g], sh.regions[g]));
    }
}

TEST_CASE("fixture shadows satisfy every shadow condition") {
    for (const char* name : {"3_1", "4_1", "3_1#4_1"}) {
        CHECK_NOTHROW(verify_shadow(builtin_shadow(name)));
        for (Root r : {Root::minus_i, Root::plus_i})
            CHECK_NOTHROW(verify_shadow(to_complex(builtin_shadow(name), r)));
    }
}

TEST_CASE("shadow search finds generic shadows in both modes") {
    for (const char* name : {"3_1", "4_1", "3_1#4_1"}) {
        ShadowColoring<Cyclotomic> ex = find_generic_shadow(builtin_coloring(name));
        CHECK_NOTHROW(verify_shadow(ex));
        ShadowColoring<Complex> fl =
            find_generic_shadow(to_complex(builtin_coloring(name), Root::minus_i));
        CHECK_NOTHROW(verify_shadow(fl));
    }
}

TEST_CASE("shadow search can be steered to the fixture shadow") {
    ShadowColoring<Cyclotomic> ex = builtin_shadow("3_1");
    ShadowSearchOptions<Cyclotomic> opt;
    opt.seed_color = ex.regions[0];
    opt.p = ex.p;
    ShadowColoring<Cyclotomic> got = find_generic_shadow(ex.arc, opt);
    CHECK(got.p == ex.p);
    for (size_t f = 0; f < ex.regions.size(); ++f)
        CHECK(vec_equal_up_to_sign(got.regions[f], ex.regions[f]));
}

TEST_CASE("degenerate steering requests are refused") {
    ShadowColoring<Cyclotomic> ex = builtin_shadow("3_1");
    ShadowSearchOptions<Cyclotomic> opt;
    opt.p = ex.arc.colors[0];  // collides with an arc color
    CHECK_THROWS_AS(find_generic_shadow(ex.arc, opt), ToleranceError);
}

TEST_CASE("identity splice keeps both factors and factors back") {
    ArcColoring<Cyclotomic> c31 = builtin_coloring("3_1");
    ArcColoring<Cyclotomic> c41 = builtin_coloring("4_1");
    auto [sum, rec] =
        connected_sum_coloring(c31, kCompositeLeftArc, c41, kCompositeRightArc);
    CHECK(verify_arc_coloring(sum).pass);
    ArcColoring<Cyclotomic> fixture = builtin_coloring("3_1#4_1");
    REQUIRE(sum.colors.size() == fixture.colors.size());
    for (size_t a = 0; a < sum.colors.size(); ++a) CHECK(sum.colors[a] == fixture.colors[a]);

    auto [f1, f2] = factor_coloring(sum, rec);
    CHECK(f1.colors == c31.colors);
    CHECK(f2.colors == c41.colors);
}

TEST_CASE("conjugated splice transports the right factor and factors back") {
    ArcColoring<Cyclotomic> c31 = builtin_coloring("3_1");
    ArcColoring<Cyclotomic> c41 = builtin_coloring("4_1");
    Mat2<Cyclotomic> g = to_matrix(ParabolicVec<Cyclotomic>{cyc(0, 0), cyc(1, 0)});
    auto [sum, rec] =
        connected_sum_coloring(c31, kCompositeLeftArc, c41, kCompositeRightArc, g);
    CHECK(verify_arc_coloring(sum).pass);
    CHECK(sum.colors[4] == cvec(1, 1, 1, 2));
    CHECK(sum.colors[5] == cvec(0, 1, 0, 2));
    CHECK(sum.colors[6] == cvec(0, 1, 0, 1));
    CHECK(sum.colors[2] == cvec(0, 0, 1, 0));
    CHECK(sum.colors[3] == cvec(0, 0, 1, 0));

    auto [f1, f2] = factor_coloring(sum, rec);
    CHECK(f1.colors == c31.colors);
    for (size_t a = 0; a < f2.colors.size(); ++a)
        CHECK(f2.colors[a] == act(g, c41.colors[a]));
}

TEST_CASE("floating splice without a conjugator uses the canonical one") {
    ArcColoring<Complex> c31 = to_complex(builtin_coloring("3_1"), Root::minus_i);
    ArcColoring<Complex> c41 = to_complex(builtin_coloring("4_1"), Root::minus_i);
    auto [sum, rec] =
        connected_sum_coloring(c31, kCompositeLeftArc, c41, kCompositeRightArc);
    CHECK(verify_arc_coloring(sum).pass);
    auto [f1, f2] = factor_coloring(sum, rec);
    CHECK(verify_arc_coloring(f1).pass);
    CHECK(verify_arc_coloring(f2).pass);
}

TEST_CASE("exact splice of unequal colors needs an explicit conjugator") {
    ArcColoring<Cyclotomic> c31 = builtin_coloring("3_1");
    ArcColoring<Cyclotomic> c41 = builtin_coloring("4_1");
    // colors at (0, 1) differ, so the identity conjugator cannot glue them
    CHECK_THROWS_AS(connected_sum_coloring(c31, 0, c41, 1), std::runtime_error);
}

TEST_CASE("factoring a corrupted splice is refused") {
    ArcColoring<Cyclotomic> c31 = builtin_coloring("3_1");
    ArcColoring<Cyclotomic> c41 = builtin_coloring("4_1");
    auto [sum, rec] =
        connected_sum_coloring(c31, kCompositeLeftArc, c41, kCompositeRightArc);
    sum.colors[rec.joined_new] = cvec(5, 0, 7, 0);
    CHECK_THROWS_AS(factor_coloring(sum, rec), ToleranceError);
}
