#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <knotsum/fixtures.hpp>
#include <knotsum/json_io.hpp>

using namespace knotsum;

namespace {

namespace fs = std::filesystem;

const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "knotsum_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path_of(const std::string& name) { return (work_dir() / name).string(); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run(const std::string& args, const std::string& out_name = "out.json") {
    std::string cmd = std::string("\"") + KNOTSUM_CLI_PATH + "\" " + args + " > \"" +
                      path_of(out_name) + "\" 2> \"" + path_of("err.txt") + "\"";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

Json out_json(const std::string& out_name = "out.json") {
    return Json::parse(read_file(path_of(out_name)));
}

}  // namespace

TEST_CASE("parse handles planar diagram text and builtins") {
    write_file(path_of("tref.pd"), "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    REQUIRE(run("parse --input " + path_of("tref.pd")) == 0);
    Json j = out_json();
    CHECK(j.at("arc_count") == 3);
    CHECK(j.at("crossings").size() == 3);
    CHECK(j.at("faces").size() == 5);

    REQUIRE(run("parse --input builtin:4_1") == 0);
    CHECK(out_json().at("arc_count") == 4);
}

TEST_CASE("malformed input exits with the input error code") {
    write_file(path_of("bad.pd"), "X(1,2,3)");
    CHECK(run("parse --input " + path_of("bad.pd")) == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("parse") == 2);  // no --input
    CHECK(run("parse --input " + path_of("does_not_exist.pd")) == 2);
    CHECK(run("alexander --input builtin:3_1 --remove-column 99") == 2);
    CHECK(run("verify --input builtin:3_1 --mode sideways") == 2);
}

TEST_CASE("wirtinger chains from a parse output file") {
    REQUIRE(run("parse --input builtin:3_1 --output " + path_of("d31.json")) == 0);
    REQUIRE(run("wirtinger --input " + path_of("d31.json")) == 0);
    Json j = out_json();
    CHECK(j.at("generators") == 3);
    CHECK(j.at("relators").size() == 3);
}

TEST_CASE("verify distinguishes good and broken colorings") {
    CHECK(run("verify --mode exact --input builtin:3_1#4_1") == 0);
    CHECK(run("verify --input builtin:3_1") == 0);

    ArcColoring<Complex> broken = to_complex(builtin_coloring("3_1"), Root::minus_i);
    broken.colors[1].beta += 1e-3;
    write_file(path_of("broken.json"), dump_json(coloring_to_json(broken)));
    CHECK(run("verify --input " + path_of("broken.json")) == 1);
}

TEST_CASE("volume reproduces the known values") {
    REQUIRE(run("volume --input builtin:4_1") == 0);
    Json j = out_json();
    CHECK(std::abs(double(j.at("vol")) - 2.029883212819307) < 1e-9);
    CHECK(std::abs(double(j.at("cs"))) < 1e-9);
    CHECK(j.at("residual_ok") == true);

    CHECK(run("volume --mode exact --input builtin:4_1") == 2);
}

TEST_CASE("shadow output feeds volume") {
    CHECK(run("shadow --mode exact --input builtin:3_1 --output " + path_of("sh31.json")) ==
          0);
    REQUIRE(run("volume --input " + path_of("sh31.json")) == 0);
    Json j = out_json();
    CHECK(std::abs(double(j.at("vol"))) < 1e-9);
    // volume of a coloring without regions is refused
    write_file(path_of("c31.json"), dump_json(coloring_to_json(builtin_coloring("3_1"))));
    CHECK(run("volume --input " + path_of("c31.json")) == 2);
}

TEST_CASE("exact twisted polynomial of the trefoil") {
    REQUIRE(run("alexander --mode exact --input builtin:3_1") == 0);
    Json j = out_json();
    CHECK(j.at("removed_column") == 2);
    Json delta = j.at("delta");
    REQUIRE(delta.size() == 2);
    CHECK(delta.at("0").at("u") == Json::array({1, 1}));
    CHECK(delta.at("2").at("u") == Json::array({1, 1}));
    CHECK(j.at("division_remainder_norm") == 0.0);
}

TEST_CASE("connected sum output factors back to the summands") {
    REQUIRE(run("consum --mode exact --input builtin:3_1 --input builtin:4_1 "
                "--arc1 2 --arc2 0 --output " +
                path_of("sum.json")) == 0);
    Json sum = Json::parse(read_file(path_of("sum.json")));
    REQUIRE(sum.contains("coloring"));
    REQUIRE(sum.contains("conjugator"));
    REQUIRE(sum.contains("splice"));
    CHECK(sum.at("coloring") == coloring_to_json(builtin_coloring("3_1#4_1")));

    REQUIRE(run("factor --mode exact --input " + path_of("sum.json")) == 0);
    Json parts = out_json();
    CHECK(parts.at("left") == coloring_to_json(builtin_coloring("3_1")));
    CHECK(parts.at("right") == coloring_to_json(builtin_coloring("4_1")));

    // the consum output is itself a coloring input for the other subcommands
    CHECK(run("verify --mode exact --input " + path_of("sum.json")) == 0);
    REQUIRE(run("alexander --mode exact --input " + path_of("sum.json")) == 0);
    CHECK(out_json().at("removed_column") == 2);
}

TEST_CASE("floating consum records the conjugator it used") {
    REQUIRE(run("consum --input builtin:3_1 --input builtin:4_1 --arc1 2 --arc2 0 "
                "--conjugator canonical --output " +
                path_of("fsum.json")) == 0);
    Json sum = Json::parse(read_file(path_of("fsum.json")));
    Mat2<Complex> g = mat_from_json<Complex>(sum.at("conjugator"));
    CHECK(std::abs(g.det() - Complex(1.0, 0.0)) < 1e-9);
    CHECK(run("factor --input " + path_of("fsum.json")) == 0);
    // canonical conjugators are a floating notion
    CHECK(run("consum --mode exact --input builtin:3_1 --input builtin:4_1 "
              "--arc1 2 --arc2 0 --conjugator canonical") == 2);
}

TEST_CASE("an explicit conjugator matrix is accepted inline") {
    Mat2<Cyclotomic> g = to_matrix(ParabolicVec<Cyclotomic>{Cyclotomic(0), Cyclotomic(1)});
    std::string arg = mat_to_json(g).dump();
    REQUIRE(run("consum --mode exact --input builtin:3_1 --input builtin:4_1 "
                "--arc1 2 --arc2 0 --conjugator '" +
                arg + "'") == 0);
    Json sum = out_json();
    Json a4 = sum.at("coloring").at("arc_colors").at("4");
    CHECK(a4 == vec_to_json(ParabolicVec<Cyclotomic>{
                    Cyclotomic(Rational(1), Rational(1)),
                    Cyclotomic(Rational(1), Rational(2))}));
}

TEST_CASE("check-example reports every reproduction check") {
    REQUIRE(run("check-example") == 0);
    Json j = out_json();
    CHECK(j.at("pass") == true);
    CHECK(j.at("checks").size() == 9);
    for (auto& [name, body] : j.at("checks").items()) CHECK(body.at("pass") == true);
}
