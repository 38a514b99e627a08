#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghsd/construct.hpp"
#include "ghsd/registry.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace ghsd;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string tmp_path(const std::string& name) {
    return "/tmp/ghsd_cli_test_" + std::to_string(getpid()) + "_" + name;
}

RunResult run(const std::string& args, const std::string& env = "") {
    std::string out = tmp_path("stdout"), err = tmp_path("stderr");
    std::string cmd = env + (env.empty() ? "" : " ") + GHSD_CLI_PATH + " " + args + " >" + out +
                      " 2>" + err;
    int status = std::system(cmd.c_str());
    RunResult r;
    if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    std::remove(out.c_str());
    std::remove(err.c_str());
    return r;
}

std::string write_file(const std::string& name, const std::string& text) {
    std::string p = tmp_path(name);
    std::ofstream(p) << text;
    return p;
}

MaskFile scalar_file(const Mask& m) {
    MaskFile mf;
    mf.mask = m;
    mf.type.nu = {MIdx(size_t(m.d), 0)};
    return mf;
}

}  // namespace

TEST_CASE("analyze a mask file and a registry id") {
    std::string b3 = write_file("b3.json", serialize_mask(scalar_file(bspline_mask(3))));
    RunResult r = run("analyze " + b3);
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["sr_order"] == 3);
    CHECK(r.err.find("sum rules") != std::string::npos);
    std::remove(b3.c_str());

    RunResult reg = run("analyze ex6.4b");
    CHECK(reg.code == 0);
    json jr = json::parse(reg.out);
    CHECK(jr["sr_order"] == 4);
    CHECK(jr["interpolatory_ok"] == true);

    // Family parameters can be overridden by name.
    RunResult moved = run("analyze ex6.2c --param t1=-27/256 --param t2=33/128 --max-order 9");
    CHECK(moved.code == 0);
    CHECK(json::parse(moved.out)["sr_order"] == 8);
}

TEST_CASE("malformed input exits with the parse code") {
    std::string badf = write_file("bad.json", "{\"version\": 1}");
    CHECK(run("analyze " + badf).code == 2);
    std::remove(badf.c_str());
    CHECK(run("analyze no_such_file_or_id.json").code == 2);
    CHECK(run("analyze ex6.3a --param q=1").code == 2);
    CHECK(run("").code != 0);
}

TEST_CASE("construct subcommands emit valid mask files") {
    RunResult b4 = run("construct bspline --n 4");
    CHECK(b4.code == 0);
    MaskFile mb4 = parse_mask(b4.out);
    CHECK(mb4.mask == bspline_mask(4));

    std::string outp = tmp_path("cubic.json");
    RunResult herm = run("construct from-spline --m 1 --N 1 --out " + outp);
    CHECK(herm.code == 0);
    MaskFile mh = parse_mask(slurp(outp));
    CHECK(mh.mask.r == 2);
    CHECK(mh.type.nu == std::vector<MIdx>{MIdx{0}, MIdx{1}});
    CHECK(mh.mask.at({0})(1, 1) == Q(1) / 4);
    CHECK(mh.mask.at({-1})(0, 1) == Q(3) / 8);
    std::remove(outp.c_str());

    RunResult ex = run("construct existence --type '0;2' --dim 1");
    CHECK(ex.code == 0);
    MaskFile me = parse_mask(ex.out);
    CHECK(me.mask.r == 2);
    CHECK(me.type.nu == std::vector<MIdx>{MIdx{0}, MIdx{2}});

    std::string b4p = write_file("b4.json", serialize_mask(scalar_file(bspline_mask(4))));
    RunResult vec = run("construct vectorize --mask " + b4p + " --N 2");
    CHECK(vec.code == 0);
    CHECK(parse_mask(vec.out).mask.r == 2);
    std::remove(b4p.c_str());

    RunResult ten = run("construct tensor --a " + std::string("ex6.3a") + " --b ex6.3a");
    CHECK(ten.code == 0);
    MaskFile mt = parse_mask(ten.out);
    CHECK(mt.mask.d == 2);
    CHECK(mt.mask.r == 4);
}

TEST_CASE("smoothness reporting and the unconverged exit code") {
    RunResult r = run("smoothness ex6.2b");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(std::fabs(j["sm2"].get<double>() - 5.5) < 1e-3);
    CHECK(j["converged"] == true);
    CHECK(j.contains("verdict"));

    RunResult part = run("smoothness ex6.2a --iters 1");
    CHECK(part.code == 5);
    CHECK(json::parse(part.out)["converged"] == false);
}

TEST_CASE("refinement CSV output and level caps") {
    RunResult r = run("refine ex6.3a --levels 2");
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string header;
    REQUIRE(std::getline(is, header));
    CHECK(header == "component,position_1,value_exact,value_float");
    size_t rows = 0;
    std::string line;
    while (std::getline(is, line)) ++rows;
    CHECK(rows > 0);

    CHECK(run("refine ex6.3a --levels 15").code == 4);
    CHECK(run("refine ex6.3a --levels 3", "GHSD_MAX_LEVEL=2").code == 4);
    CHECK(run("refine ex6.3a --levels 3", "GHSD_MAX_LEVEL=3").code == 0);
}

TEST_CASE("refinement echoes supplied data at level zero") {
    std::string data = write_file("w0.json", R"({"entries":[{"k":[0],"values":["1","0"]}]})");
    RunResult r = run("refine ex6.4b --levels 0 --data " + data);
    CHECK(r.code == 0);
    CHECK(r.out.find("1,0,1,1\n") != std::string::npos);
    CHECK(r.out.find("2,1/2,0,0\n") != std::string::npos);
    std::remove(data.c_str());
}

TEST_CASE("verify runs the recorded expectations") {
    RunResult r = run("verify ex6.3b");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("sum rules: ok") != std::string::npos);
    CHECK(r.out.find("spline residual: ok") != std::string::npos);
    CHECK(run("verify not_an_id").code == 2);
}

TEST_CASE("spline dump") {
    RunResult r = run("spline ex6.3b");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["components"].size() == 2);
    CHECK(run("spline nope").code == 2);
}
