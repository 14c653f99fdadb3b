#include <doctest.h>

#include "cli_app.hpp"

#include <sharpdeg/errors.hpp>

#include <fstream>
#include <sstream>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = sharpdeg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("analyze") {
    auto r = run_cli({"analyze", "x1^3 + 3 x1 x2 + x2^3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("nodes=4") != std::string::npos);
    CHECK(r.out.find("sc=2") != std::string::npos);

    auto j = run_cli({"--json", "analyze", "x1^3 + 3 x1 x2 + x2^3"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"nodes\":4") != std::string::npos);
}

TEST_CASE("input errors exit with two") {
    auto r = run_cli({"analyze", "x1 + + x2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("offset 5") != std::string::npos);
}

TEST_CASE("generate and verify") {
    auto gen = run_cli({"generate", "faran3"});
    CHECK(gen.code == 0);
    std::string poly = gen.out.substr(0, gen.out.find('\n'));
    auto ver = run_cli({"verify-bounds", poly});
    CHECK(ver.code == 0);
    CHECK(ver.out.find("T1.2ii") != std::string::npos);
    CHECK(ver.out.find("sharp") != std::string::npos);

    auto wrong = run_cli({"generate", "nosuch"});
    CHECK(wrong.code == 2);
}

TEST_CASE("generate inductive") {
    auto r = run_cli({"generate", "inductive", "s", "--steps", "x3:s;x3^2:s"});
    CHECK(r.code == 0);
    auto w = run_cli({"generate", "whitney", "3", "3"});
    CHECK(r.out == w.out);
}

TEST_CASE("enumerate certificates") {
    auto r = run_cli({"--json", "enumerate", "T3.4", "--dmax", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"theorem\":\"T3.4\"") != std::string::npos);
    CHECK(r.out.find("\"ok\":true") != std::string::npos);

    auto capped = run_cli({"enumerate", "T5.2", "--dmax", "5"});
    CHECK(capped.code == 3);
}

TEST_CASE("convert both ways") {
    auto to_map = run_cli({"convert", "x1 + x2 + x1 x3 + x2 x3 + x3^2"});
    CHECK(to_map.code == 0);
    CHECK(to_map.out.find("map source=Q(3,0)") != std::string::npos);
    std::string map_text = to_map.out.substr(0, to_map.out.find('\n'));
    auto back = run_cli({"convert", map_text});
    CHECK(back.code == 0);
    CHECK(back.out.find("X0") != std::string::npos);
}

TEST_CASE("render a diagram file") {
    std::string path = "test_diagram_tmp.json";
    {
        std::ofstream f(path);
        f << R"({"n":2,"d":3,"points":[{"m":[0,0],"sign":"P"},{"m":[1,0],"sign":"N"}]})";
    }
    auto ascii = run_cli({"render", path});
    CHECK(ascii.code == 0);
    CHECK(ascii.out.find('o') != std::string::npos);
    CHECK(ascii.out.find('@') != std::string::npos);
    auto svg = run_cli({"render", path, "--format", "svg"});
    CHECK(svg.code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    std::remove(path.c_str());

    auto missing = run_cli({"render", "no_such_file.json"});
    CHECK(missing.code == 2);
}

TEST_CASE("trace mode emits receipts") {
    // a path-support member reduces via a slice; --trace prints the receipt
    auto gen = run_cli({"generate", "whitney", "3", "3"});
    std::string poly = gen.out.substr(0, gen.out.find('\n'));
    auto r = run_cli({"--trace", "analyze", poly, "--reduce"});
    CHECK(r.code == 0);
    CHECK(r.out.find("slice-off-face") != std::string::npos);
    CHECK(r.out.find("\"transform\":\"reduce3d_slice_off_face\"") != std::string::npos);
}
