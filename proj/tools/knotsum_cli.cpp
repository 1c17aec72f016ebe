// Command-line frontend. Every subcommand reads JSON (or a built-in fixture
// via builtin:NAME) and writes deterministic JSON: object keys are sorted and
// floats carry 15 significant digits. Exit codes: 0 success, 1 mathematical
// failure (residual, remainder, or verification out of tolerance), 2 input
// error.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <knotsum/knotsum.hpp>

namespace {

using namespace knotsum;

bool is_builtin(const std::string& p) { return p.rfind("builtin:", 0) == 0; }

std::string builtin_part(const std::string& p) { return p.substr(8); }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json load_json(const std::string& path) { return Json::parse(slurp(path)); }

void emit(const Json& j, const std::string& out_path) {
    std::string s = dump_json(j);
    if (out_path.empty()) {
        std::fwrite(s.data(), 1, s.size(), stdout);
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << s;
    }
}

enum class Mode { floating, exact };

Mode parse_mode(const std::string& s) {
    if (s == "floating") return Mode::floating;
    if (s == "exact") return Mode::exact;
    throw std::runtime_error("mode must be floating or exact");
}

// Consum output files wrap the coloring; accept both shapes everywhere.
const Json& coloring_node(const Json& j) {
    return j.is_object() && j.contains("coloring") ? j.at("coloring") : j;
}

template <class K>
ArcColoring<K> load_coloring(const std::string& input);

template <>
ArcColoring<Cyclotomic> load_coloring(const std::string& input) {
    if (is_builtin(input)) return builtin_coloring(builtin_part(input));
    const Json j = load_json(input);
    const Json& node = coloring_node(j);
    if (!json_mode_exact(node))
        throw std::runtime_error("exact mode needs an input declared exact");
    return coloring_from_json<Cyclotomic>(node);
}

template <>
ArcColoring<Complex> load_coloring(const std::string& input) {
    if (is_builtin(input))
        return to_complex(builtin_coloring(builtin_part(input)), Root::minus_i);
    const Json j = load_json(input);
    const Json& node = coloring_node(j);
    if (json_mode_exact(node))
        return to_complex(coloring_from_json<Cyclotomic>(node), Root::minus_i);
    return coloring_from_json<Complex>(node);
}

ShadowColoring<Complex> load_floating_shadow(const std::string& input) {
    if (is_builtin(input))
        return to_complex(builtin_shadow(builtin_part(input)), Root::minus_i);
    const Json j = load_json(input);
    const Json& node = coloring_node(j);
    if (!node.contains("region_colors"))
        throw std::runtime_error(
            "this input has no region colors; run the shadow subcommand first");
    if (json_mode_exact(node)) return to_complex(shadow_from_json<Cyclotomic>(node), Root::minus_i);
    return shadow_from_json<Complex>(node);
}

OrientedDiagram load_diagram(const std::string& input) {
    if (is_builtin(input)) return builtin_diagram(builtin_part(input));
    const Json j = load_json(input);
    const Json& node = coloring_node(j);
    if (node.is_object() && node.contains("diagram")) return diagram_from_json(node.at("diagram"));
    return diagram_from_json(node);
}

struct Options {
    std::vector<std::string> inputs;
    std::string mode = "floating";
    std::string output;
    std::string conjugator;
    double tol_residual = 1e-9;
    double tol_coeff = 1e-9;
    int remove_column = -1;
    int arc1 = -1;
    int arc2 = -1;
};

const std::string& single_input(const Options& o) {
    if (o.inputs.size() != 1)
        throw std::runtime_error("this subcommand needs exactly one --input");
    return o.inputs[0];
}

int do_parse(const Options& o) {
    const std::string& in = single_input(o);
    std::string text = is_builtin(in) ? builtin_pd(builtin_part(in)) : slurp(in);
    emit(diagram_to_json(parse_pd(text)), o.output);
    return 0;
}

int do_wirtinger(const Options& o) {
    emit(presentation_to_json(wirtinger(load_diagram(single_input(o)))), o.output);
    return 0;
}

template <class K>
int do_verify(const Options& o) {
    ArcColoring<K> c = load_coloring<K>(single_input(o));
    ColoringReport r = verify_arc_coloring(c, o.tol_residual);
    Json crossings = Json::array();
    for (char ok : r.crossing_ok) crossings.push_back(bool(ok));
    emit(Json{{"pass", r.pass}, {"crossings", crossings}}, o.output);
    return r.pass ? 0 : 1;
}

template <class K>
int do_shadow(const Options& o) {
    ArcColoring<K> c = load_coloring<K>(single_input(o));
    ShadowSearchOptions<K> opt;
    opt.tol = o.tol_residual;
    emit(shadow_to_json(find_generic_shadow(c, opt)), o.output);
    return 0;
}

int do_volume(const Options& o) {
    if (parse_mode(o.mode) == Mode::exact)
        throw std::runtime_error("volume is a floating computation; use --mode floating");
    ComplexVolume v = complex_volume(load_floating_shadow(single_input(o)), o.tol_residual);
    emit(volume_to_json(v), o.output);
    return v.residual_ok ? 0 : 1;
}

template <class K>
int do_alexander(const Options& o) {
    const std::string& in = single_input(o);
    ArcColoring<K> c = load_coloring<K>(in);
    int default_column = c.diagram.arc_count - 1;
    if (!is_builtin(in)) {
        const Json j = load_json(in);
        if (j.is_object() && j.contains("splice"))
            default_column = splice_from_json(j.at("splice")).joined_keep;
    }
    int column = o.remove_column >= 0 ? o.remove_column : default_column;
    if (column >= c.diagram.arc_count)
        throw std::runtime_error("--remove-column out of range");
    Presentation pres = drop_relator(wirtinger(c.diagram), c.diagram.n() - 1);
    emit(alexander_to_json(twisted_alexander(pres, c.colors, column, o.tol_coeff)), o.output);
    return 0;
}

template <class K>
int do_consum(const Options& o) {
    if (o.inputs.size() != 2)
        throw std::runtime_error("consum needs two --input colorings (left, then right)");
    if (o.arc1 < 0 || o.arc2 < 0)
        throw std::runtime_error("consum needs --arc1 and --arc2");
    ArcColoring<K> c1 = load_coloring<K>(o.inputs[0]);
    ArcColoring<K> c2 = load_coloring<K>(o.inputs[1]);
    if (o.arc1 >= c1.diagram.arc_count || o.arc2 >= c2.diagram.arc_count)
        throw std::runtime_error("splice arc id out of range");

    Mat2<K> used;
    if (o.conjugator.empty()) {
        if constexpr (ScalarOps<K>::exact) {
            used = Mat2<K>::identity();
        } else {
            used = canonical_conjugator(c2.colors[o.arc2], c1.colors[o.arc1]);
        }
    } else if (o.conjugator == "canonical") {
        if constexpr (ScalarOps<K>::exact) {
            throw std::runtime_error("the canonical conjugator needs --mode floating");
        } else {
            used = canonical_conjugator(c2.colors[o.arc2], c1.colors[o.arc1]);
        }
    } else {
        Json mj = o.conjugator[0] == '{' ? Json::parse(o.conjugator) : load_json(o.conjugator);
        used = mat_from_json<K>(mj);
    }

    auto [colored, rec] =
        connected_sum_coloring(c1, o.arc1, c2, o.arc2, used, o.tol_residual);
    emit(Json{{"coloring", coloring_to_json(colored)},
              {"conjugator", mat_to_json(used)},
              {"splice", splice_to_json(rec)}},
         o.output);
    return 0;
}

template <class K>
int do_factor(const Options& o) {
    const Json j = load_json(single_input(o));
    if (!j.is_object() || !j.contains("coloring") || !j.contains("splice"))
        throw std::runtime_error("factor needs a consum output with coloring and splice");
    ArcColoring<K> c;
    if constexpr (ScalarOps<K>::exact) {
        if (!json_mode_exact(j.at("coloring")))
            throw std::runtime_error("exact mode needs an input declared exact");
        c = coloring_from_json<Cyclotomic>(j.at("coloring"));
    } else {
        c = json_mode_exact(j.at("coloring"))
                ? to_complex(coloring_from_json<Cyclotomic>(j.at("coloring")), Root::minus_i)
                : coloring_from_json<Complex>(j.at("coloring"));
    }
    SpliceRecord rec = splice_from_json(j.at("splice"));
    auto [f1, f2] = factor_coloring(c, rec, o.tol_residual);
    emit(Json{{"left", coloring_to_json(f1)}, {"right", coloring_to_json(f2)}}, o.output);
    return 0;
}

int do_check_example(const Options& o) {
    Json checks = Json::object();
    bool all = true;
    for (const CheckResult& c : reproduction_checks()) {
        checks[c.name] = Json{{"pass", c.pass}, {"detail", c.detail}};
        all = all && c.pass;
    }
    emit(Json{{"checks", checks}, {"pass", all}}, o.output);
    return all ? 0 : 1;
}

int dispatch(const std::string& name, const Options& o) {
    Mode m = parse_mode(o.mode);
    if (o.tol_residual <= 0.0 || o.tol_coeff <= 0.0)
        throw std::runtime_error("tolerances must be positive");
    if (name == "parse") return do_parse(o);
    if (name == "wirtinger") return do_wirtinger(o);
    if (name == "verify")
        return m == Mode::exact ? do_verify<Cyclotomic>(o) : do_verify<Complex>(o);
    if (name == "shadow")
        return m == Mode::exact ? do_shadow<Cyclotomic>(o) : do_shadow<Complex>(o);
    if (name == "volume") return do_volume(o);
    if (name == "alexander")
        return m == Mode::exact ? do_alexander<Cyclotomic>(o) : do_alexander<Complex>(o);
    if (name == "consum")
        return m == Mode::exact ? do_consum<Cyclotomic>(o) : do_consum<Complex>(o);
    if (name == "factor")
        return m == Mode::exact ? do_factor<Cyclotomic>(o) : do_factor<Complex>(o);
    if (name == "check-example") return do_check_example(o);
    throw std::runtime_error("unknown subcommand: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parabolic coloring invariants of knot diagrams"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&](CLI::App* s, bool with_mode) {
        s->add_option("--input", o.inputs, "input file, or builtin:{3_1,4_1,3_1#4_1}");
        s->add_option("--output", o.output, "write JSON here instead of standard output");
        if (with_mode) s->add_option("--mode", o.mode, "floating or exact");
    };

    add_io(app.add_subcommand("parse", "planar diagram code to diagram JSON"), false);
    add_io(app.add_subcommand("wirtinger", "knot group presentation of a diagram"), false);

    CLI::App* verify = app.add_subcommand("verify", "check a coloring at every crossing");
    add_io(verify, true);
    verify->add_option("--tol-residual", o.tol_residual, "verification tolerance");

    CLI::App* shadow = app.add_subcommand("shadow", "extend a coloring to a generic shadow");
    add_io(shadow, true);
    shadow->add_option("--tol-residual", o.tol_residual, "genericity tolerance");

    CLI::App* volume = app.add_subcommand("volume", "complex volume of a shadow coloring");
    add_io(volume, true);
    volume->add_option("--tol-residual", o.tol_residual, "hyperbolicity residual tolerance");

    CLI::App* alexander =
        app.add_subcommand("alexander", "twisted Alexander polynomial of a coloring");
    add_io(alexander, true);
    alexander->add_option("--tol-coeff", o.tol_coeff, "coefficient tolerance");
    alexander->add_option("--remove-column", o.remove_column,
                          "generator column to drop (default: splice arc if present, "
                          "else the last generator)");

    CLI::App* consum = app.add_subcommand("consum", "connected sum of two colorings");
    add_io(consum, true);
    consum->add_option("--tol-residual", o.tol_residual, "verification tolerance");
    consum->add_option("--arc1", o.arc1, "splice arc in the left diagram");
    consum->add_option("--arc2", o.arc2, "splice arc in the right diagram");
    consum->add_option("--conjugator", o.conjugator,
                       "matrix JSON, a path to one, or the word canonical");

    CLI::App* factor = app.add_subcommand("factor", "split a spliced coloring back apart");
    add_io(factor, true);
    factor->add_option("--tol-residual", o.tol_residual, "verification tolerance");

    add_io(app.add_subcommand("check-example", "run the worked-example reproduction checks"),
           false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app.get_subcommands().at(0)->get_name(), o);
    } catch (const knotsum::ToleranceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
