// Splices the two bundled colorings into their connected sum, then shows the
// two headline facts: complex volumes add and twisted polynomials multiply.

#include <cstdio>

#include <knotsum/knotsum.hpp>

using namespace knotsum;

namespace {

ComplexVolume volume_of(const ArcColoring<Cyclotomic>& c) {
    return complex_volume(find_generic_shadow(to_complex(c, Root::minus_i)));
}

Laurent<Cyclotomic> delta_of(const ArcColoring<Cyclotomic>& c) {
    Presentation pres = drop_relator(wirtinger(c.diagram), c.diagram.n() - 1);
    return twisted_alexander(pres, c.colors, c.diagram.arc_count - 1).delta;
}

std::string poly_str(const Laurent<Cyclotomic>& p) {
    std::string s;
    for (auto& [e, v] : p.coeffs()) {
        if (!s.empty()) s += " + ";
        s += "(" + v.str() + ")t^" + std::to_string(e);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

int main() {
    ArcColoring<Cyclotomic> left = builtin_coloring("3_1");
    ArcColoring<Cyclotomic> right = builtin_coloring("4_1");
    auto [sum, rec] =
        connected_sum_coloring(left, kCompositeLeftArc, right, kCompositeRightArc);

    ComplexVolume vl = volume_of(left), vr = volume_of(right), vs = volume_of(sum);
    std::printf("vol:  %+.12f  %+.12f  sum %+.12f  (defect %.2e)\n", vl.vol, vr.vol, vs.vol,
                std::abs(vs.vol - vl.vol - vr.vol));
    double pi2 = std::numbers::pi * std::numbers::pi;
    double cs_defect = vs.cs - vl.cs - vr.cs;
    cs_defect -= pi2 * std::round(cs_defect / pi2);
    std::printf("cs:   %+.12f  %+.12f  sum %+.12f  (defect mod pi^2 %.2e)\n", vl.cs, vr.cs,
                vs.cs, std::abs(cs_defect));

    Laurent<Cyclotomic> dl = delta_of(left), dr = delta_of(right), ds = delta_of(sum);
    std::printf("delta left:   %s\n", poly_str(dl).c_str());
    std::printf("delta right:  %s\n", poly_str(dr).c_str());
    std::printf("delta sum:    %s\n", poly_str(ds).c_str());
    Laurent<Cyclotomic> square;  // (1 - t)^2
    square.set(0, Cyclotomic(1));
    square.set(1, Cyclotomic(-2));
    square.set(2, Cyclotomic(1));
    bool product_ok = equal_up_to_unit(ds, dl * dr * square);
    std::printf("product formula delta_sum = delta_left delta_right (1-t)^2: %s\n",
                product_ok ? "holds" : "FAILS");

    auto [back_left, back_right] = factor_coloring(sum, rec);
    bool roundtrip_ok =
        back_left.colors == left.colors && back_right.colors == right.colors;
    std::printf("factoring the splice recovers both colorings: %s\n",
                roundtrip_ok ? "yes" : "NO");
    return product_ok && roundtrip_ok ? 0 : 1;
}
