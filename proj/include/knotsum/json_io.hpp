#pragma once

// JSON encoding of every interchange value. Output is deterministic: keys are
// emitted in sorted order and every floating-point number is pre-rounded to
// 15 significant digits, so identical inputs give byte-identical files.
// Exact scalars u + v x are written as {"u": [num, den], "v": [num, den]};
// complex numbers as [re, im].

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "alexander.hpp"
#include "coloring.hpp"
#include "diagram.hpp"
#include "fixtures.hpp"
#include "volume.hpp"

namespace knotsum {

using Json = nlohmann::json;

inline double round_15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

// ---------------------------------------------------------------------------
// Scalars.

template <class K>
Json scalar_to_json(const K& v);

template <>
inline Json scalar_to_json<Complex>(const Complex& z) {
    return Json::array({round_15(z.real()), round_15(z.imag())});
}

inline Json rational_to_json(const Rational& r) {
    return Json::array({r.num(), r.den()});
}

template <>
inline Json scalar_to_json<Cyclotomic>(const Cyclotomic& c) {
    return Json{{"u", rational_to_json(c.u())}, {"v", rational_to_json(c.v())}};
}

template <class K>
K scalar_from_json(const Json& j);

template <>
inline Complex scalar_from_json<Complex>(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::runtime_error("expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw std::runtime_error("expected a rational as [numerator, denominator]");
    return Rational(j[0].get<long long>(), j[1].get<long long>());
}

template <>
inline Cyclotomic scalar_from_json<Cyclotomic>(const Json& j) {
    if (!j.is_object() || !j.contains("u") || !j.contains("v"))
        throw std::runtime_error("expected an exact scalar as {\"u\": .., \"v\": ..}");
    return Cyclotomic(rational_from_json(j.at("u")), rational_from_json(j.at("v")));
}

template <class K>
Json vec_to_json(const ParabolicVec<K>& v) {
    return Json{{"alpha", scalar_to_json<K>(v.alpha)}, {"beta", scalar_to_json<K>(v.beta)}};
}

template <class K>
ParabolicVec<K> vec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta"))
        throw std::runtime_error("expected a vector as {\"alpha\": .., \"beta\": ..}");
    return {scalar_from_json<K>(j.at("alpha")), scalar_from_json<K>(j.at("beta"))};
}

template <class K>
Json mat_to_json(const Mat2<K>& m) {
    return Json{{"a", scalar_to_json<K>(m.a)},
                {"b", scalar_to_json<K>(m.b)},
                {"c", scalar_to_json<K>(m.c)},
                {"d", scalar_to_json<K>(m.d)}};
}

template <class K>
Mat2<K> mat_from_json(const Json& j) {
    for (const char* k : {"a", "b", "c", "d"})
        if (!j.is_object() || !j.contains(k))
            throw std::runtime_error("expected a matrix as {\"a\": .., .., \"d\": ..}");
    return {scalar_from_json<K>(j.at("a")), scalar_from_json<K>(j.at("b")),
            scalar_from_json<K>(j.at("c")), scalar_from_json<K>(j.at("d"))};
}

// ---------------------------------------------------------------------------
// Diagrams.

inline Json diagram_to_json(const OrientedDiagram& d) {
    Json crossings = Json::array();
    for (const Crossing& c : d.crossings)
        crossings.push_back(Json{{"sign", c.sign},
                                 {"over", c.over},
                                 {"under_in", c.under_in},
                                 {"under_out", c.under_out},
                                 {"quad", c.quad}});
    Json faces = Json::array();
    for (const Face& f : d.faces) {
        Json sides = Json::array();
        for (const FaceSide& s : f.sides)
            sides.push_back(Json{{"arc", s.arc}, {"dir", s.dir}});
        faces.push_back(sides);
    }
    return Json{{"arc_count", d.arc_count},
                {"edge_count", d.edge_count},
                {"crossings", crossings},
                {"faces", faces}};
}

inline OrientedDiagram diagram_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("crossings") || !j.contains("arc_count") ||
        !j.contains("edge_count") || !j.contains("faces"))
        throw std::runtime_error("diagram JSON needs crossings, arc_count, edge_count, faces");
    OrientedDiagram d;
    d.arc_count = j.at("arc_count").get<int>();
    d.edge_count = j.at("edge_count").get<int>();
    for (const Json& c : j.at("crossings")) {
        Crossing cr;
        cr.sign = c.at("sign").get<int>();
        cr.over = c.at("over").get<int>();
        cr.under_in = c.at("under_in").get<int>();
        cr.under_out = c.at("under_out").get<int>();
        auto q = c.at("quad");
        if (!q.is_array() || q.size() != 4)
            throw std::runtime_error("crossing quad must list four faces");
        for (int i = 0; i < 4; ++i) cr.quad[i] = q[i].get<int>();
        d.crossings.push_back(cr);
    }
    for (const Json& f : j.at("faces")) {
        Face face;
        for (const Json& s : f)
            face.sides.push_back({s.at("arc").get<int>(), s.at("dir").get<int>()});
        d.faces.push_back(face);
    }
    d.validate();
    return d;
}

// ---------------------------------------------------------------------------
// Colorings and shadows. One schema serves both: region_colors and p are
// present only for shadows. The mode field says how to read the scalars.

template <class K>
Json coloring_to_json(const ArcColoring<K>& c) {
    Json colors = Json::object();
    for (int a = 0; a < int(c.colors.size()); ++a)
        colors[std::to_string(a)] = vec_to_json(c.colors[a]);
    return Json{{"mode", ScalarOps<K>::exact ? "exact" : "floating"},
                {"diagram", diagram_to_json(c.diagram)},
                {"arc_colors", colors}};
}

template <class K>
Json shadow_to_json(const ShadowColoring<K>& sh) {
    Json j = coloring_to_json(sh.arc);
    Json regions = Json::object();
    for (int f = 0; f < int(sh.regions.size()); ++f)
        regions[std::to_string(f)] = vec_to_json(sh.regions[f]);
    j["region_colors"] = regions;
    j["p"] = vec_to_json(sh.p);
    return j;
}

inline bool json_mode_exact(const Json& j) {
    if (!j.is_object() || !j.contains("mode"))
        throw std::runtime_error("coloring JSON needs a mode field");
    std::string mode = j.at("mode").get<std::string>();
    if (mode != "exact" && mode != "floating")
        throw std::runtime_error("mode must be exact or floating");
    return mode == "exact";
}

template <class K>
std::vector<ParabolicVec<K>> indexed_vecs_from_json(const Json& j, int count,
                                                    const char* what) {
    if (!j.is_object() || int(j.size()) != count)
        throw std::runtime_error(std::string("expected one ") + what + " per index");
    std::vector<ParabolicVec<K>> out(count);
    std::vector<bool> seen(count, false);
    for (auto& [key, val] : j.items()) {
        int idx;
        try {
            idx = std::stoi(key);
        } catch (...) {
            throw std::runtime_error(std::string(what) + " keys must be integers");
        }
        if (idx < 0 || idx >= count || seen[idx])
            throw std::runtime_error(std::string(what) + " index out of range or repeated");
        seen[idx] = true;
        out[idx] = vec_from_json<K>(val);
    }
    return out;
}

template <class K>
ArcColoring<K> coloring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("diagram") || !j.contains("arc_colors"))
        throw std::runtime_error("coloring JSON needs diagram and arc_colors");
    ArcColoring<K> c;
    c.diagram = diagram_from_json(j.at("diagram"));
    c.colors = indexed_vecs_from_json<K>(j.at("arc_colors"), c.diagram.arc_count, "arc color");
    return c;
}

template <class K>
ShadowColoring<K> shadow_from_json(const Json& j) {
    if (!j.contains("region_colors") || !j.contains("p"))
        throw std::runtime_error("shadow JSON needs region_colors and p");
    ShadowColoring<K> sh;
    sh.arc = coloring_from_json<K>(j);
    sh.regions = indexed_vecs_from_json<K>(j.at("region_colors"),
                                           sh.arc.diagram.face_count(), "region color");
    sh.p = vec_from_json<K>(j.at("p"));
    return sh;
}

// ---------------------------------------------------------------------------
// Splice records, presentations, Laurent polynomials, results.

inline Json splice_to_json(const SpliceRecord& r) {
    return Json{{"left", diagram_to_json(r.left)},
                {"right", diagram_to_json(r.right)},
                {"left_arc", r.left_arc},
                {"right_arc", r.right_arc},
                {"joined_keep", r.joined_keep},
                {"joined_new", r.joined_new},
                {"left_arc_map", r.left_arc_map},
                {"right_arc_map", r.right_arc_map},
                {"left_face_map", r.left_face_map},
                {"right_face_map", r.right_face_map}};
}

inline SpliceRecord splice_from_json(const Json& j) {
    for (const char* k : {"left", "right", "left_arc", "right_arc", "joined_keep",
                          "joined_new", "left_arc_map", "right_arc_map", "left_face_map",
                          "right_face_map"})
        if (!j.is_object() || !j.contains(k))
            throw std::runtime_error("splice record JSON is missing fields");
    SpliceRecord r;
    r.left = diagram_from_json(j.at("left"));
    r.right = diagram_from_json(j.at("right"));
    r.left_arc = j.at("left_arc").get<int>();
    r.right_arc = j.at("right_arc").get<int>();
    r.joined_keep = j.at("joined_keep").get<int>();
    r.joined_new = j.at("joined_new").get<int>();
    r.left_arc_map = j.at("left_arc_map").get<std::vector<int>>();
    r.right_arc_map = j.at("right_arc_map").get<std::vector<int>>();
    r.left_face_map = j.at("left_face_map").get<std::vector<int>>();
    r.right_face_map = j.at("right_face_map").get<std::vector<int>>();
    return r;
}

inline Json presentation_to_json(const Presentation& p) {
    Json relators = Json::array();
    for (const GroupWord& w : p.relators) {
        Json word = Json::array();
        for (auto [g, e] : w.letters) word.push_back(Json::array({g, e}));
        relators.push_back(word);
    }
    return Json{{"generators", p.generators}, {"relators", relators}};
}

template <class K>
Json laurent_to_json(const Laurent<K>& p) {
    Json j = Json::object();
    for (auto& [e, v] : p.coeffs()) j[std::to_string(e)] = scalar_to_json<K>(v);
    return j;
}

template <class K>
Json alexander_to_json(const TwistedAlexander<K>& t) {
    return Json{{"delta", laurent_to_json(t.delta)},
                {"delta_prime", laurent_to_json(t.delta_prime)},
                {"removed_column", t.removed_column},
                {"division_remainder_norm", round_15(t.remainder_norm)}};
}

inline Json volume_to_json(const ComplexVolume& v) {
    return Json{{"w0", Json::array({round_15(v.w0.real()), round_15(v.w0.imag())})},
                {"vol", round_15(v.vol)},
                {"cs", round_15(v.cs)},
                {"max_residual", round_15(v.max_residual)},
                {"residual_ok", v.residual_ok}};
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace knotsum
