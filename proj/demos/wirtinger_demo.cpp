// Parses a planar diagram code and prints the diagram counts and the knot
// group presentation. Pass the code as the only argument, or run without
// arguments for a trefoil.

#include <cstdio>
#include <string>

#include <knotsum/diagram.hpp>

int main(int argc, char** argv) {
    std::string code = argc > 1 ? argv[1] : "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    try {
        knotsum::OrientedDiagram d = knotsum::parse_pd(code);
        std::printf("crossings %d, arcs %d, faces %d\n", d.n(), d.arc_count,
                    d.face_count());
        knotsum::Presentation pres = knotsum::wirtinger(d);
        std::printf("generators a1..a%d, relators:\n", pres.generators);
        for (const knotsum::GroupWord& r : pres.relators)
            std::printf("  %s = 1\n", r.str().c_str());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
