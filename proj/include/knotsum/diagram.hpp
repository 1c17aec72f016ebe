#pragma once

// Oriented knot diagrams. A diagram is a list of crossings; each crossing
// records its sign, the three incident arcs (over, under-in, under-out) and
// the four quadrant faces (a, b, c, d) counterclockwise from the quadrant
// between the two outgoing strand ends. For an n-crossing knot diagram there
// are n arcs, 2n edges and n+2 faces.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "words.hpp"

namespace knotsum {

using ArcId = int;
using FaceId = int;

struct Crossing {
    int sign = +1;  // +1 or -1
    ArcId over = -1, under_in = -1, under_out = -1;
    std::array<FaceId, 4> quad{-1, -1, -1, -1};  // a, b, c, d

    bool operator==(const Crossing&) const = default;
};

// One face boundary side: the arc and its direction along the counterclockwise
// boundary walk (+1 with the arc, -1 against). Populated by the PD parser;
// spliced diagrams keep the face count but drop the walks.
struct FaceSide {
    ArcId arc;
    int dir;
    bool operator==(const FaceSide&) const = default;
};

struct Face {
    std::vector<FaceSide> sides;
    bool operator==(const Face&) const = default;
};

// Directed face adjacency across one crossing arm: the region left of the arc
// equals the region right of it acted on by the arc color.
struct BoundaryArm {
    FaceId right, left;
    ArcId arc;
};

struct OrientedDiagram {
    std::vector<Crossing> crossings;
    int arc_count = 0;
    std::vector<Face> faces;
    int edge_count = 0;

    int n() const { return int(crossings.size()); }
    int face_count() const { return int(faces.size()); }

    // The 4n directed face adjacencies, read off each crossing.
    std::vector<BoundaryArm> boundary_arms() const {
        std::vector<BoundaryArm> arms;
        arms.reserve(4 * crossings.size());
        for (const Crossing& c : crossings) {
            auto [a, b, cc, d] = c.quad;
            if (c.sign > 0) {
                arms.push_back({a, b, c.under_out});
                arms.push_back({cc, b, c.over});
                arms.push_back({d, cc, c.under_in});
                arms.push_back({d, a, c.over});
            } else {
                arms.push_back({a, b, c.over});
                arms.push_back({cc, b, c.under_in});
                arms.push_back({d, cc, c.over});
                arms.push_back({d, a, c.under_out});
            }
        }
        return arms;
    }

    void validate() const {
        if (crossings.empty()) throw std::runtime_error("diagram has no crossings");
        int nn = n();
        if (arc_count != nn)
            throw std::runtime_error("knot diagram must have one arc per crossing");
        if (face_count() != nn + 2)
            throw std::runtime_error("face count violates Euler's formula");
        if (edge_count != 2 * nn) throw std::runtime_error("edge count must be 2n");
        std::vector<int> outs(arc_count, 0), ins(arc_count, 0);
        for (const Crossing& c : crossings) {
            if (c.sign != 1 && c.sign != -1) throw std::runtime_error("crossing sign must be +-1");
            for (ArcId a : {c.over, c.under_in, c.under_out})
                if (a < 0 || a >= arc_count) throw std::runtime_error("arc id out of range");
            for (FaceId f : c.quad)
                if (f < 0 || f >= face_count()) throw std::runtime_error("face id out of range");
            outs[c.under_out]++;
            ins[c.under_in]++;
        }
        for (int a = 0; a < arc_count; ++a)
            if (outs[a] != 1 || ins[a] != 1)
                throw std::runtime_error("each arc must start and end at exactly one crossing");
        // Every arm pairs with the matching arm of the neighboring crossing,
        // so each directed (right, left, arc) triple occurs an even number of times.
        std::map<std::tuple<int, int, int>, int> seen;
        for (const BoundaryArm& arm : boundary_arms())
            seen[{arm.right, arm.left, arm.arc}]++;
        for (auto& [k, v] : seen)
            if (v % 2 != 0) throw std::runtime_error("unpaired crossing arm");
    }

    // Crossing index where the arc leaves the under-strand.
    int arc_start(ArcId a) const {
        for (int i = 0; i < n(); ++i)
            if (crossings[i].under_out == a) return i;
        throw std::runtime_error("arc start not found");
    }

    bool operator==(const OrientedDiagram&) const = default;
};

// Wirtinger relator of one crossing: positive gives over under_in over^-1
// under_out^-1, negative gives over under_out over^-1 under_in^-1.
inline GroupWord crossing_relator(const Crossing& c) {
    GroupWord w;
    w.append(c.over, 1);
    w.append(c.sign > 0 ? c.under_in : c.under_out, 1);
    w.append(c.over, -1);
    w.append(c.sign > 0 ? c.under_out : c.under_in, -1);
    return w;
}

struct Presentation {
    int generators = 0;
    std::vector<GroupWord> relators;
};

// One generator per arc, one relator per crossing. Any single relator is a
// consequence of the others; callers drop one before building Alexander data.
inline Presentation wirtinger(const OrientedDiagram& d) {
    Presentation p;
    p.generators = d.arc_count;
    for (const Crossing& c : d.crossings) p.relators.push_back(crossing_relator(c));
    return p;
}

// ---------------------------------------------------------------------------
// PD code parsing.
//
// A tuple X(e1,e2,e3,e4) lists the four edges counterclockwise starting from
// the incoming under-edge e1; e3 is the outgoing under-edge. Edges are
// numbered 1..2n along the knot, so the over-strand enters at whichever of
// e2, e4 has the other as successor. Over-in at e4 makes the crossing
// positive, at e2 negative.

namespace detail {

struct PdTuple {
    std::array<int, 4> e;
};

inline std::vector<PdTuple> tokenize_pd(const std::string& text) {
    std::vector<PdTuple> out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (!out.empty() && text[i] == ',') {
            ++i;
            skip_ws();
            if (i >= text.size()) break;
        }
        if (text[i] != 'X' && text[i] != 'x')
            throw std::runtime_error("expected crossing tuple starting with X");
        ++i;
        skip_ws();
        if (i >= text.size() || (text[i] != '(' && text[i] != '['))
            throw std::runtime_error("expected ( after X");
        char close = text[i] == '(' ? ')' : ']';
        ++i;
        PdTuple t{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            size_t start = i;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
            if (i == start) throw std::runtime_error("crossing tuple needs four edge labels");
            t.e[k] = std::stoi(text.substr(start, i - start));
            skip_ws();
            if (k < 3) {
                if (i >= text.size() || text[i] != ',')
                    throw std::runtime_error("crossing tuple needs four edge labels");
                ++i;
            }
        }
        skip_ws();
        if (i >= text.size() || text[i] != close)
            throw std::runtime_error("unterminated crossing tuple");
        ++i;
        out.push_back(t);
        skip_ws();
    }
    if (out.empty()) throw std::runtime_error("empty planar diagram code");
    return out;
}

}  // namespace detail

inline OrientedDiagram parse_pd(const std::string& text) {
    using detail::PdTuple;
    std::vector<PdTuple> tuples = detail::tokenize_pd(text);
    int n = int(tuples.size());
    int ne = 2 * n;

    auto succ = [&](int e) { return e % ne + 1; };

    // slots[e] = the (crossing, arm) positions where edge e appears
    std::vector<std::vector<std::pair<int, int>>> slots(ne + 1);
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            int e = tuples[c].e[k];
            if (e < 1 || e > ne)
                throw std::runtime_error("edge label out of range 1..2n: " + std::to_string(e));
            slots[e].push_back({c, k});
        }
    for (int e = 1; e <= ne; ++e)
        if (slots[e].size() != 2)
            throw std::runtime_error("edge " + std::to_string(e) +
                                     " must appear exactly twice");

    // over-strand direction and sign per crossing
    std::vector<int> sign(n), over_in_arm(n), over_out_arm(n);
    for (int c = 0; c < n; ++c) {
        int e2 = tuples[c].e[1], e4 = tuples[c].e[3];
        bool in4 = succ(e4) == e2;  // over runs e4 -> e2: positive
        bool in2 = succ(e2) == e4;  // over runs e2 -> e4: negative
        if (in4 == in2) {
            if (!in4)
                throw std::runtime_error("over-strand edges are not consecutive at crossing " +
                                         std::to_string(c + 1));
            // both orders are consecutive only in a one-crossing kink; read it
            // as positive
            in2 = false;
        }
        sign[c] = in4 ? +1 : -1;
        over_in_arm[c] = in4 ? 3 : 1;
        over_out_arm[c] = in4 ? 1 : 3;
        if (succ(tuples[c].e[0]) != tuples[c].e[2])
            throw std::runtime_error("under-strand edges are not consecutive at crossing " +
                                     std::to_string(c + 1));
    }

    // Each edge must be incoming at one crossing and outgoing at the other.
    // head slot: arm 0 (under-in) or the over-in arm; tail: arm 2 or over-out.
    auto is_head = [&](int c, int k) { return k == 0 || k == over_in_arm[c]; };
    std::vector<std::pair<int, int>> head(ne + 1, {-1, -1}), tail(ne + 1, {-1, -1});
    for (int e = 1; e <= ne; ++e) {
        for (auto [c, k] : slots[e]) {
            auto& slot = is_head(c, k) ? head[e] : tail[e];
            if (slot.first != -1)
                throw std::runtime_error("edge " + std::to_string(e) +
                                         " has inconsistent direction");
            slot = {c, k};
        }
        if (head[e].first == -1 || tail[e].first == -1)
            throw std::runtime_error("edge " + std::to_string(e) +
                                     " has inconsistent direction");
    }

    // Arcs: an edge starts a new arc iff it leaves an under-crossing.
    std::vector<int> arc_of_edge(ne + 1, -1);
    std::vector<int> arc_starts;
    for (int e = 1; e <= ne; ++e)
        if (tail[e].second == 2) arc_starts.push_back(e);
    if (int(arc_starts.size()) != n)
        throw std::runtime_error("arc count mismatch; not a knot diagram");
    for (int a = 0; a < n; ++a) {
        int e = arc_starts[a];
        while (true) {
            if (arc_of_edge[e] != -1) throw std::runtime_error("arc tracing loop");
            arc_of_edge[e] = a;
            auto [c, k] = head[e];
            if (k == 0) break;  // passes under: arc ends
            e = tuples[c].e[over_out_arm[c]];
        }
    }
    for (int e = 1; e <= ne; ++e)
        if (arc_of_edge[e] == -1)
            throw std::runtime_error("edge " + std::to_string(e) + " not reached by any arc");

    // Face tracing. Darts are directed edge occurrences; a walk arriving at
    // arm k leaves along the arm k-1 (mod 4), which keeps the traced face on
    // the left. The corner between arms k-1 and k belongs to that face.
    // Dart id: edge e forward = 2e, backward = 2e+1. Forward means tail->head.
    std::vector<int> corner_face(4 * n, -1);  // corner_face[4c + j] = face of Q_{j,j+1}
    std::vector<int> dart_face(2 * ne + 2, -1);
    std::vector<std::vector<FaceSide>> face_sides;
    auto dart_to_slot = [&](int dart) {  // slot where the dart arrives
        int e = dart / 2;
        return dart % 2 == 0 ? head[e] : tail[e];
    };
    auto slot_out_dart = [&](int c, int k) {  // dart leaving slot (c, k)
        int e = tuples[c].e[k];
        return tail[e] == std::make_pair(c, k) ? 2 * e : 2 * e + 1;
    };
    int face_id = 0;
    for (int d0 = 2; d0 < 2 * ne + 2; ++d0) {
        if (dart_face[d0] != -1) continue;
        std::vector<FaceSide> sides;
        int d = d0;
        while (dart_face[d] == -1) {
            dart_face[d] = face_id;
            sides.push_back({arc_of_edge[d / 2], d % 2 == 0 ? +1 : -1});
            auto [c, k] = dart_to_slot(d);
            int k_out = (k + 3) % 4;
            corner_face[4 * c + k_out] = face_id;
            d = slot_out_dart(c, k_out);
        }
        if (d != d0) throw std::runtime_error("face walk did not close");
        face_sides.push_back(std::move(sides));
        ++face_id;
    }
    if (face_id != n + 2)
        throw std::runtime_error("face count violates Euler's formula; not a planar knot code");

    OrientedDiagram d;
    d.arc_count = n;
    d.edge_count = ne;
    for (auto& s : face_sides) d.faces.push_back({std::move(s)});
    for (int c = 0; c < n; ++c) {
        Crossing cr;
        cr.sign = sign[c];
        cr.under_in = arc_of_edge[tuples[c].e[0]];
        cr.under_out = arc_of_edge[tuples[c].e[2]];
        cr.over = arc_of_edge[tuples[c].e[over_in_arm[c]]];
        // corner j holds quadrant Q_{j,j+1}; positive: a = Q12, negative: a = Q23
        auto Q = [&](int j) { return corner_face[4 * c + j]; };
        if (sign[c] > 0)
            cr.quad = {Q(1), Q(2), Q(3), Q(0)};
        else
            cr.quad = {Q(2), Q(3), Q(0), Q(1)};
        d.crossings.push_back(cr);
    }
    d.validate();
    return d;
}

// ---------------------------------------------------------------------------
// Connected sum.
//
// Both chosen arcs are cut immediately after their starting crossings and
// cross-joined respecting orientation. The composite arc that keeps arc1's id
// starts at arc1's start and carries arc2's over-passes; the new arc (id =
// left arc count) starts at arc2's start and carries arc1's over-passes. The
// faces left and right of the two cut points merge pairwise.

struct SpliceRecord {
    OrientedDiagram left, right;
    ArcId left_arc = -1, right_arc = -1;
    ArcId joined_keep = -1;  // composite arc keeping left_arc's id
    ArcId joined_new = -1;   // the extra arc created by the splice
    std::vector<ArcId> left_arc_map, right_arc_map;
    std::vector<FaceId> left_face_map, right_face_map;
};

inline std::pair<OrientedDiagram, SpliceRecord> connected_sum(const OrientedDiagram& d1,
                                                              ArcId arc1,
                                                              const OrientedDiagram& d2,
                                                              ArcId arc2) {
    if (arc1 < 0 || arc1 >= d1.arc_count || arc2 < 0 || arc2 >= d2.arc_count)
        throw std::runtime_error("connected sum arc id out of range");
    auto cut_faces = [](const OrientedDiagram& d, ArcId a) {
        const Crossing& c = d.crossings[d.arc_start(a)];
        // faces left/right of the under-out segment
        return c.sign > 0 ? std::pair<FaceId, FaceId>{c.quad[1], c.quad[0]}
                          : std::pair<FaceId, FaceId>{c.quad[0], c.quad[3]};
    };
    auto [L1, R1] = cut_faces(d1, arc1);
    auto [L2, R2] = cut_faces(d2, arc2);
    if ((L1 == R1) != (L2 == R2))
        throw std::runtime_error("cut segment bounds a single face on one side only");

    SpliceRecord rec;
    rec.left = d1;
    rec.right = d2;
    rec.left_arc = arc1;
    rec.right_arc = arc2;
    int m = d1.arc_count;
    rec.joined_keep = arc1;
    rec.joined_new = m;

    rec.left_arc_map.resize(d1.arc_count);
    std::iota(rec.left_arc_map.begin(), rec.left_arc_map.end(), 0);
    rec.right_arc_map.resize(d2.arc_count);
    for (ArcId r = 0; r < d2.arc_count; ++r)
        rec.right_arc_map[r] = r < arc2 ? m + 1 + r : m + r;
    rec.right_arc_map[arc2] = rec.joined_keep;

    int F1 = d1.face_count();
    rec.left_face_map.resize(F1);
    std::iota(rec.left_face_map.begin(), rec.left_face_map.end(), 0);
    rec.right_face_map.assign(d2.face_count(), -1);
    rec.right_face_map[L2] = L1;
    rec.right_face_map[R2] = R1;
    int next = F1;
    for (FaceId f = 0; f < d2.face_count(); ++f)
        if (rec.right_face_map[f] == -1) rec.right_face_map[f] = next++;

    OrientedDiagram out;
    out.arc_count = d1.arc_count + d2.arc_count;
    out.edge_count = d1.edge_count + d2.edge_count;
    out.faces.resize(d1.face_count() + d2.face_count() - 2);
    auto remap_arc1 = [&](ArcId a, bool under_out) {
        if (a != arc1) return a;
        return under_out ? rec.joined_keep : rec.joined_new;
    };
    auto remap_arc2 = [&](ArcId a, bool under_out) {
        if (a != arc2) return rec.right_arc_map[a];
        return under_out ? rec.joined_new : rec.joined_keep;
    };
    for (const Crossing& c : d1.crossings) {
        Crossing nc = c;
        nc.over = remap_arc1(c.over, false);
        nc.under_in = remap_arc1(c.under_in, false);
        nc.under_out = remap_arc1(c.under_out, true);
        out.crossings.push_back(nc);
    }
    for (const Crossing& c : d2.crossings) {
        Crossing nc = c;
        nc.over = remap_arc2(c.over, false);
        nc.under_in = remap_arc2(c.under_in, false);
        nc.under_out = remap_arc2(c.under_out, true);
        for (FaceId& f : nc.quad) f = rec.right_face_map[f];
        out.crossings.push_back(nc);
    }
    out.validate();
    return {out, rec};
}

// The splice record remembers both summands, so factoring the diagram is a
// lookup.
inline std::pair<OrientedDiagram, OrientedDiagram> factor_diagram(const SpliceRecord& rec) {
    return {rec.left, rec.right};
}

}  // namespace knotsum
