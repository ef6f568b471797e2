#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(JETCALC_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string scratch_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/jetcalc-cli-tests-XXXXXX";
        char* d = mkdtemp(tmpl);
        REQUIRE(d != nullptr);
        return std::string(d);
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kCuspIdeal = "vars: x,y\nchar: 0\nx^2 + y^3\n";
const char* kCuspResolution = R"({
  "ambient_dim": 2,
  "divisors": [
    {"id": "E0", "a": 1, "k": 0},
    {"id": "E1", "a": 2, "k": 1},
    {"id": "E2", "a": 3, "k": 2},
    {"id": "E3", "a": 6, "k": 4}
  ],
  "faces": [["E0","E3"],["E1","E3"],["E2","E3"]]
})";

}  // namespace

TEST_CASE("lct-diagonal prints the exact rational") {
    RunResult r = run("lct-diagonal --exponents 2,3");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["lct"] == "5/6");
}

TEST_CASE("dim of the empty ideal in two variables") {
    std::string path = write_file("empty2.ideal", "vars: x,y\nchar: 0\n");
    RunResult r = run("dim --no-cache --ideal " + path);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["dimension"] == 2);
    CHECK(j["unit_ideal"] == false);
    CHECK(j["basis_size"] == 0);
}

TEST_CASE("contact-codim on the cusp resolution") {
    std::string path = write_file("cusp.json", kCuspResolution);
    RunResult r = run("contact-codim --data " + path + " --m 6");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["codim"] == 5);
    RunResult rb = run("contact-codim --data " + path + " --m 6 --bruteforce");
    CHECK(json::parse(rb.out)["codim"] == 5);
}

TEST_CASE("jet-eqs emits the ideal text format") {
    std::string ideal = write_file("cusp.ideal", kCuspIdeal);
    std::string alg = write_file("t3.alg", "algvars: t\nrelations: t^3\n");
    RunResult r = run("jet-eqs --ideal " + ideal + " --algebra " + alg);
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "vars: a_1_1,a_2_1,a_3_1,a_1_2,a_2_2,a_3_2\n"
          "char: 0\n"
          "a_1_2^3 + a_1_1^2\n"
          "3*a_1_2^2*a_2_2 + 2*a_1_1*a_2_1\n"
          "3*a_1_2*a_2_2^2 + 3*a_1_2^2*a_3_2 + a_2_1^2 + 2*a_1_1*a_3_1\n");
}

TEST_CASE("jet-eqs output feeds back into dim") {
    std::string ideal = write_file("node.ideal", "vars: x,y\nchar: 0\nx*y\n");
    std::string alg = write_file("box22.alg", "algvars: s,t\nrelations: s^2, t^2\n");
    RunResult eqs = run("jet-eqs --ideal " + ideal + " --algebra " + alg);
    std::string sys = write_file("node-box22.ideal", eqs.out);
    RunResult r = run("dim --no-cache --ideal " + sys);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["dimension"] == 5);
}

TEST_CASE("cache: identical runs are byte-identical, hits included") {
    std::string ideal = write_file("cusp2.ideal", kCuspIdeal);
    std::string cache = scratch_dir() + "/cache";
    std::string args = "dim --cache-dir " + cache + " --ideal " + ideal;
    RunResult first = run(args);
    RunResult second = run(args);  // served from cache
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
    // --no-cache recomputes; the result fields agree (the config echo
    // naturally records the different flag)
    json cached = json::parse(first.out);
    json uncached = json::parse(run("dim --no-cache --ideal " + ideal).out);
    for (const char* key : {"dimension", "unit_ideal", "basis_size"})
        CHECK(cached[key] == uncached[key]);
    RunResult verified = run(args + " --verify");
    CHECK(verified.exit_code == 0);
    CHECK(verified.out == first.out);
}

TEST_CASE("cache: corrupt entries are evicted, never trusted") {
    std::string ideal = write_file("node2.ideal", "vars: x,y\nchar: 0\nx*y\n");
    std::string cache = scratch_dir() + "/cache-corrupt";
    std::string args = "dim --cache-dir " + cache + " --ideal " + ideal;
    RunResult first = run(args);
    CHECK(first.exit_code == 0);
    // clobber every cache entry
    std::string clobber = "for f in " + cache + "/*.json; do echo garbage > $f; done";
    REQUIRE(std::system(clobber.c_str()) == 0);
    RunResult second = run(args);
    CHECK(second.exit_code == 0);
    CHECK(second.out == first.out);
}

TEST_CASE("cache: repeated dim on the cusp jet system at m=5") {
    std::string ideal = write_file("cusp5src.ideal", kCuspIdeal);
    std::string alg = write_file("t6.alg", "algvars: t\nrelations: t^6\n");
    RunResult eqs = run("jet-eqs --ideal " + ideal + " --algebra " + alg);
    std::string sys = write_file("cusp-m5.ideal", eqs.out);
    std::string cache = scratch_dir() + "/cache-cusp5";
    std::string args = "dim --cache-dir " + cache + " --ideal " + sys;
    RunResult first = run(args);
    CHECK(first.exit_code == 0);
    CHECK(json::parse(first.out)["dimension"] == 7);
    RunResult second = run(args);  // answered from the cache
    CHECK(second.out == first.out);
}

TEST_CASE("mld subcommands") {
    std::string data = write_file("blowup.json", R"({
      "ambient_dim": 2,
      "divisors": [
        {"id": "E", "a": 1, "k": 1, "center_in_Z": true},
        {"id": "L", "a": 1, "k": 0, "center_in_Z": false}
      ],
      "faces": [["E","L"]]
    })");
    CHECK(json::parse(run("mld-resolution --data " + data + " --q 1").out)["mld"] == "1");
    CHECK(json::parse(run("mld-resolution --data " + data + " --q 3").out)["mld"] ==
          "-inf");

    std::string line = write_file("line.ideal", "vars: x,y\nchar: 0\nx\n");
    std::string origin = write_file("origin.ideal", "vars: x,y\nchar: 0\nx\ny\n");
    json est = json::parse(
        run("mld-estimate --ideal " + line + " --center " + origin + " --q 1 --mmax 3").out);
    CHECK(est["mld"] == "1");
    json neg = json::parse(
        run("mld-estimate --ideal " + line + " --center " + origin + " --q 3 --mmax 3").out);
    CHECK(neg["mld"] == "-inf");
    CHECK(neg["certified"] == true);
}

TEST_CASE("alpha, beta, homog, lci-check, prop54 wiring") {
    std::string node = write_file("node3.ideal", "vars: x,y\nchar: 0\nx*y\n");
    CHECK(json::parse(run("alpha --ideal " + node + " --p 2 --q 2").out)["alpha"] == 5);
    json beta = json::parse(run("beta --ideal " + node + " --m 2").out);
    CHECK(beta["beta"] == 4);
    json bm = json::parse(run("beta-monomial --exponents 1,1 --m 2").out);
    CHECK(bm["beta"] == 4);
    CHECK(bm["limit"] == "3/2");
    json homog = json::parse(run("homog --n 2 --d 2 --mmax 3").out);
    CHECK(homog["jet_dims"] == json::array({1, 2, 3, 4}));
    std::string alg = write_file("t2.alg", "algvars: t\nrelations: t^2\n");
    json lci = json::parse(
        run("lci-check --ideal " + node + " --dim 1 --algebra " + alg).out);
    CHECK(lci["pure_dimensional"] == true);
    CHECK(lci["irreducible"] == false);
    json p54 = json::parse(run("prop54 --n 2 --d 2 --r 2 --jmax 2").out);
    CHECK(p54["limit"] == "4");
    CHECK(p54["necessary_condition_holds"] == false);
}

TEST_CASE("lct-estimate report shape") {
    std::string line = write_file("xline.ideal", "vars: x\nchar: 0\nx\n");
    json j = json::parse(run("lct-estimate --ideal " + line + " --mmax 3").out);
    CHECK(j["lct"] == "1");
    CHECK(j["certified"] == true);
    REQUIRE(j["sequence"].size() == 4);
    CHECK(j["sequence"][2]["dim"] == 0);
}

TEST_CASE("prime field runs are labeled heuristic") {
    std::string node = write_file("node4.ideal", "vars: x,y\nchar: 0\nx*y\n");
    json j = json::parse(run("dim --no-cache --char 7 --ideal " + node).out);
    CHECK(j["field"] == "GF(7)");
    CHECK(j["heuristic"] == true);
    CHECK(j["dimension"] == 1);
}

TEST_CASE("exit codes distinguish bad input from budget exhaustion") {
    CHECK(run("dim --ideal /nonexistent/file.ideal").exit_code == 2);
    std::string bad = write_file("bad.ideal", "vars: x\nchar: 0\nx + z\n");
    CHECK(run("dim --ideal " + bad).exit_code == 2);
    std::string junk = write_file("junk.ideal", "x^2\nvars: x\n");
    CHECK(run("dim --ideal " + junk).exit_code == 2);

    std::string cusp = write_file("cusp3.ideal", kCuspIdeal);
    RunResult r = run("lct-estimate --ideal " + cusp + " --mmax 5 --budget 30");
    CHECK(r.exit_code == 3);
    json j = json::parse(r.out);
    CHECK(j["partial"] == true);

    CHECK(run("frobnicate --ideal x").exit_code == 2);
}
