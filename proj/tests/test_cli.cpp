#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "p1b/classify.hpp"
#include "p1b/cli.hpp"
#include "p1b/jsonio.hpp"

using namespace p1b;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"p1b"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Json json_of(const CliResult& r) { return Json::parse(r.out); }

} // namespace

TEST_CASE("classify subcommand") {
    const CliResult human =
        run_cli({"classify", "--family", "DecFa", "--a", "2", "--b", "1", "--c", "1"});
    CHECK(human.code == 0);
    CHECK(human.out.find("maximal:    yes") != std::string::npos);
    CHECK(human.out.find("stiff:      no") != std::string::npos);

    const CliResult j = run_cli({"--json", "classify", "--family", "DecFa", "--a", "2",
                                 "--b", "1", "--c", "1"});
    REQUIRE(j.code == 0);
    const Json doc = json_of(j);
    CHECK(doc.at("maximal") == true);
    CHECK(doc.at("stiff") == false);
    CHECK(doc.at("superstiff") == false);
    CHECK(doc.at("descriptor").at("family") == "DecFa");
    CHECK(doc.at("descriptor").at("c") == 1);

    // flag order: --json may come after the subcommand too
    const CliResult j2 = run_cli({"classify", "--family", "Schwarz", "--b", "1", "--json"});
    REQUIRE(j2.code == 0);
    CHECK(json_of(j2).at("superstiff") == true);
}

TEST_CASE("classify of a raw datum goes through recognition") {
    const CliResult r = run_cli({"--json", "classify", "--family", "Raw", "--a", "1",
                                 "--b", "1", "--c", "3", "--rows", "0;1"});
    REQUIRE(r.code == 0);
    const Json doc = json_of(r);
    CHECK(doc.at("reason").get<std::string>().find("recognized as Umemura(1,1,3)") !=
          std::string::npos);
}

TEST_CASE("reduce subcommand") {
    const CliResult human = run_cli(
        {"reduce", "--family", "DecFa", "--a", "1", "--b", "2", "--c", "1"});
    CHECK(human.code == 0);
    CHECK(human.out.find("maximal model: DecP2(1)") != std::string::npos);

    const CliResult j = run_cli({"--json", "reduce", "--family", "Umemura", "--a", "1",
                                 "--b", "3", "--c", "4"});
    REQUIRE(j.code == 0);
    const Json doc = json_of(j);
    CHECK(doc.at("target").at("family") == "Schwarz");
    CHECK(doc.at("chain").size() == 3);
    CHECK(doc.at("verdict").at("maximal") == true);
}

TEST_CASE("enumerate subcommand with JSON round trips") {
    const CliResult j =
        run_cli({"--json", "enumerate", "--a-max", "0", "--b-max", "1", "--c-max", "1"});
    REQUIRE(j.code == 0);
    const Json doc = json_of(j);
    CHECK(doc.at("count") == 8);
    REQUIRE(doc.at("classes").size() == 8);
    for (const auto& cl : doc.at("classes")) {
        const BundleDesc d = desc_from_json(cl.at("descriptor"));
        CHECK(desc_json(d) == cl.at("descriptor"));
    }

    // library-level round trip over a bigger box
    for (const auto& [d, v] : enumerate_bundles(3, 4, 8)) {
        (void)v;
        CHECK(desc_from_json(desc_json(d)) == d);
    }

    const CliResult human =
        run_cli({"enumerate", "--a-max", "0", "--b-max", "1", "--c-max", "1"});
    CHECK(human.code == 0);
    CHECK(human.out.find("8 classes") != std::string::npos);
}

TEST_CASE("moduli-dim subcommand") {
    const CliResult human = run_cli({"moduli-dim", "--a", "0", "--b", "2", "--c", "4"});
    CHECK(human.code == 0);
    CHECK(human.out == "8\n");

    const CliResult j =
        run_cli({"--json", "moduli-dim", "--a", "2", "--b", "3", "--c", "4"});
    REQUIRE(j.code == 0);
    CHECK(json_of(j).at("dim") == 3);

    CHECK(run_cli({"moduli-dim", "--a", "-1", "--b", "2", "--c", "4"}).code == 2);
}

TEST_CASE("act subcommand") {
    // the swap reverses the window coefficients: P_0 = 1 goes to P_0 = z^2
    const CliResult j = run_cli({"--json", "act", "--a", "0", "--b", "1", "--c", "4",
                                 "--gen", "zgl2", "--mat", "0,1,1,0", "--rows", "1,0"});
    REQUIRE(j.code == 0);
    const Json doc = json_of(j);
    CHECK(doc.at("point") != doc.at("image"));

    const CliResult fixed =
        run_cli({"--json", "act", "--a", "1", "--b", "1", "--c", "3", "--gen", "zgl2",
                 "--mat", "1,0,0,1", "--rows", "0;1", "--fixed", "3"});
    REQUIRE(fixed.code == 0);
    CHECK(json_of(fixed).at("fixed") == true);

    CHECK(run_cli({"act", "--a", "0", "--b", "1", "--c", "4", "--gen", "shear",
                   "--mat", "1,0,0,1", "--rows", "0,1"})
              .code == 2);
}

TEST_CASE("normalize subcommand") {
    const CliResult j = run_cli({"--json", "normalize", "--a", "0", "--b", "1", "--c",
                                 "3", "--p", "1:2,2:2;"});
    REQUIRE(j.code == 0);
    const Json doc = json_of(j);
    const CanonicalP p = canonical_from_json(doc.at("canonical"));
    CHECK(p.rows[0].coeff(0) == Rat(1));
    CHECK(p.rows[0].coeff(1) == Rat(1));
    CHECK(doc.at("recognized").is_null());

    const CliResult rec = run_cli({"--json", "normalize", "--a", "2", "--b", "2", "--c",
                                   "4", "--p", ";3:5;"});
    REQUIRE(rec.code == 0);
    CHECK(json_of(rec).at("recognized").at("family") == "Umemura");
}

TEST_CASE("schwarz subcommand") {
    const CliResult human = run_cli({"schwarz", "--b", "1"});
    CHECK(human.code == 0);
    CHECK(human.out.find("[[1, 0], [u, v]]") != std::string::npos);
    CHECK(human.out.find("(s, t)") != std::string::npos);

    const CliResult neg = run_cli({"schwarz", "--b", "-1"});
    CHECK(neg.code == 0);
    CHECK(neg.out.find("(s, t)") == std::string::npos);

    const CliResult j = run_cli({"--json", "schwarz", "--b", "2"});
    REQUIRE(j.code == 0);
    const Json doc = json_of(j);
    CHECK(doc.at("b") == 2);
    CHECK(doc.at("uv").size() == 2);
    CHECK(doc.contains("st_times_s_minus_t"));

    CHECK(run_cli({"schwarz", "--b", "-2"}).code == 2);
}

TEST_CASE("jumps subcommand") {
    const CliResult human = run_cli({"jumps", "--entries", "y; x; 0; y^-1"});
    CHECK(human.code == 0);
    CHECK(human.out.find("generic type (0, 0)") != std::string::npos);
    CHECK(human.out.find("jump at x = 0") != std::string::npos);

    const CliResult rem =
        run_cli({"--json", "jumps", "--entries", "y; x^2; 0; y^-1", "--remove"});
    REQUIRE(rem.code == 0);
    const Json doc = json_of(rem);
    CHECK(doc.at("steps").size() == 2);
    CHECK(doc.at("final").at("jumps").empty());

    const CliResult fam =
        run_cli({"jumps", "--family", "HatSchwarz", "--b", "2"});
    CHECK(fam.code == 0);
    CHECK(fam.out.find("generic type (3, 1)") != std::string::npos);
    CHECK(fam.out.find("no jumping fibres") != std::string::npos);

    CHECK(run_cli({"jumps"}).code == 2);
    CHECK(run_cli({"jumps", "--entries", "y; x; 0"}).code == 2);
    CHECK(run_cli({"jumps", "--entries", "y; x^-1; 0; y^-1"}).code == 2);
}

TEST_CASE("graph subcommand") {
    const CliResult human = run_cli({"graph", "--family", "Umemura", "--a", "2", "--b",
                                     "2", "--c", "4", "--radius", "2"});
    CHECK(human.code == 0);
    CHECK(human.out.find("4 classes, 6 links") != std::string::npos);

    const CliResult dot = run_cli({"graph", "--family", "Schwarz", "--b", "3",
                                   "--radius", "1", "--dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph links {", 0) == 0);

    const CliResult j = run_cli({"--json", "graph", "--family", "Schwarz", "--b", "3",
                                 "--radius", "1"});
    REQUIRE(j.code == 0);
    CHECK(json_of(j).at("nodes").size() == 1);
}

TEST_CASE("output redirection") {
    const std::string path = "cli_out_test.json";
    const CliResult r = run_cli({"--json", "--out", path, "moduli-dim", "--a", "0",
                                 "--b", "1", "--c", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    Json doc;
    f >> doc;
    CHECK(doc.at("dim") == 3);
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("usage and error exit codes") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"classify"}).code == 2);
    CHECK(run_cli({"classify", "--family", "Nope", "--b", "1"}).code == 2);
    CHECK(run_cli({"classify", "--family", "Umemura", "--a", "1", "--b", "1", "--c",
                   "7"})
              .code == 2);
    const CliResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("selftest battery") {
    REQUIRE(setenv("P1BL_MAX_DEGREE", "2", 1) == 0);
    const CliResult ok = run_cli({"selftest"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all groups passed") != std::string::npos);
    CHECK(ok.out.find("degree cap 2") != std::string::npos);

    REQUIRE(setenv("P1BL_MAX_DEGREE", "zebra", 1) == 0);
    CHECK(run_cli({"selftest"}).code == 2);
    REQUIRE(setenv("P1BL_MAX_DEGREE", "0", 1) == 0);
    CHECK(run_cli({"selftest"}).code == 2);
    REQUIRE(unsetenv("P1BL_MAX_DEGREE") == 0);
}
