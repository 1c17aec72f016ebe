#pragma once

// Built-in fixtures: the trefoil, the figure-eight knot, and their connected
// sum, with the worked parabolic colorings over Q(x), x^2 + x + 1 = 0. The
// composite fixture equals connected_sum(trefoil, arc 2, figure-eight, arc 0)
// arc for arc and face for face.

#include <string>

#include "coloring.hpp"
#include "diagram.hpp"
#include "exact.hpp"

namespace knotsum {

namespace detail {

inline Cyclotomic cyc(int u, int v) { return Cyclotomic(Rational(u), Rational(v)); }

inline ParabolicVec<Cyclotomic> cvec(int au, int av, int bu, int bv) {
    return {cyc(au, av), cyc(bu, bv)};
}

inline OrientedDiagram make_diagram(int faces,
                                    std::vector<Crossing> crossings) {
    OrientedDiagram d;
    d.crossings = std::move(crossings);
    d.arc_count = int(d.crossings.size());
    d.edge_count = 2 * d.arc_count;
    d.faces.resize(faces);
    d.validate();
    return d;
}

}  // namespace detail

inline OrientedDiagram builtin_diagram(const std::string& name) {
    using detail::make_diagram;
    if (name == "3_1")
        return make_diagram(5, {{+1, 1, 2, 0, {2, 3, 1, 0}},
                                {+1, 0, 1, 2, {4, 3, 2, 0}},
                                {+1, 2, 0, 1, {1, 3, 4, 0}}});
    if (name == "4_1")
        return make_diagram(6, {{-1, 0, 2, 3, {3, 2, 0, 1}},
                                {-1, 2, 0, 1, {0, 2, 3, 5}},
                                {+1, 3, 1, 2, {5, 3, 1, 4}},
                                {+1, 1, 3, 0, {1, 0, 5, 4}}});
    if (name == "3_1#4_1")
        return make_diagram(9, {{+1, 1, 3, 0, {2, 3, 1, 0}},
                                {+1, 0, 1, 2, {4, 3, 2, 0}},
                                {+1, 3, 0, 1, {1, 3, 4, 0}},
                                {-1, 2, 5, 6, {6, 5, 3, 4}},
                                {-1, 5, 2, 4, {3, 5, 6, 8}},
                                {+1, 6, 4, 5, {8, 6, 4, 7}},
                                {+1, 4, 6, 3, {4, 3, 8, 7}}});
    throw std::runtime_error("unknown fixture name: " + name);
}

// The splice arcs of the composite fixture: arc 2 of the trefoil and arc 0 of
// the figure-eight.
inline constexpr ArcId kCompositeLeftArc = 2;
inline constexpr ArcId kCompositeRightArc = 0;

inline std::string builtin_pd(const std::string& name) {
    if (name == "3_1") return "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    if (name == "4_1") return "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
    throw std::runtime_error("no planar diagram code for fixture: " + name);
}

inline ArcColoring<Cyclotomic> builtin_coloring(const std::string& name) {
    using detail::cvec;
    ArcColoring<Cyclotomic> c;
    c.diagram = builtin_diagram(name);
    if (name == "3_1") {
        c.colors = {cvec(-1, 0, 1, 0), cvec(1, 0, 0, 0), cvec(0, 0, 1, 0)};
    } else if (name == "4_1") {
        c.colors = {cvec(0, 0, 1, 0), cvec(1, 1, 0, 1), cvec(0, 1, 0, 1),
                    cvec(0, 1, 0, 0)};
    } else if (name == "3_1#4_1") {
        c.colors = {cvec(-1, 0, 1, 0), cvec(1, 0, 0, 0),  cvec(0, 0, 1, 0),
                    cvec(0, 0, 1, 0),  cvec(1, 1, 0, 1),  cvec(0, 1, 0, 1),
                    cvec(0, 1, 0, 0)};
    } else {
        throw std::runtime_error("unknown fixture name: " + name);
    }
    return c;
}

inline ShadowColoring<Cyclotomic> builtin_shadow(const std::string& name) {
    using detail::cvec;
    ShadowColoring<Cyclotomic> sh;
    sh.arc = builtin_coloring(name);
    sh.p = cvec(1, 0, 2, 0);
    if (name == "3_1") {
        sh.regions = {cvec(2, 0, 1, 0), cvec(2, 0, 3, 0), cvec(1, 0, 1, 0),
                      cvec(-1, 0, 3, 0), cvec(-1, 0, 4, 0)};
    } else if (name == "4_1") {
        sh.regions = {cvec(-1, 0, 3, 0),  cvec(-1, 0, 4, 0),  cvec(3, 4, 7, 4),
                      cvec(3, 4, 4, 0),   cvec(-2, 4, -1, -1), cvec(-2, 3, -1, -1)};
    } else if (name == "3_1#4_1") {
        sh.regions = {cvec(2, 0, 1, 0),   cvec(2, 0, 3, 0),   cvec(1, 0, 1, 0),
                      cvec(-1, 0, 3, 0),  cvec(-1, 0, 4, 0),  cvec(3, 4, 7, 4),
                      cvec(3, 4, 4, 0),   cvec(-2, 4, -1, -1), cvec(-2, 3, -1, -1)};
    } else {
        throw std::runtime_error("unknown fixture name: " + name);
    }
    return sh;
}

// ---------------------------------------------------------------------------
// Exact-to-floating conversion at a chosen root of x^2 + x + 1.

inline ParabolicVec<Complex> to_complex(const ParabolicVec<Cyclotomic>& v, Root root) {
    return {to_complex(v.alpha, root), to_complex(v.beta, root)};
}

inline Mat2<Complex> to_complex(const Mat2<Cyclotomic>& m, Root root) {
    return {to_complex(m.a, root), to_complex(m.b, root), to_complex(m.c, root),
            to_complex(m.d, root)};
}

inline std::vector<ParabolicVec<Complex>> to_complex(
    const std::vector<ParabolicVec<Cyclotomic>>& vs, Root root) {
    std::vector<ParabolicVec<Complex>> out;
    for (auto& v : vs) out.push_back(to_complex(v, root));
    return out;
}

inline ArcColoring<Complex> to_complex(const ArcColoring<Cyclotomic>& c, Root root) {
    return {c.diagram, to_complex(c.colors, root)};
}

inline ShadowColoring<Complex> to_complex(const ShadowColoring<Cyclotomic>& sh, Root root) {
    return {to_complex(sh.arc, root), to_complex(sh.regions, root), to_complex(sh.p, root)};
}

}  // namespace knotsum
