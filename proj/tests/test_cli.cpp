#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "qgentle/cli.hpp"

using namespace qgentle;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("ag verb prints the invariant") {
    CliResult r = run({"ag", fixture_path("quiverA.bq")});
    CHECK(r.code == 0);
    CHECK(r.out == "(0,4)* + (3,1)* + (3,3)*\n");
    CliResult rb = run({"ag", fixture_path("quiverB.bq")});
    CHECK(rb.out == "(0,4)* + (2,2)* + (4,2)*\n");
}

TEST_CASE("outputs are byte-deterministic") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"ag", fixture_path("quiverA.bq")},
             {"hh", fixture_path("quiverA.bq"), "--char", "2", "--max", "12"},
             {"params", fixture_path("quiverB.bq"), "--m", "2"},
             {"classify", fixture_path("quiverA.bq"), "--m", "2"},
             {"compare", fixture_path("quiverA.bq"), fixture_path("quiverB.bq"), "--max", "10"},
             {"generate", "--m", "2", "--s1", "1", "--k1", "1", "--s2", "3"},
         }) {
        CliResult first = run(args);
        CliResult second = run(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("hh matches the library sequence") {
    CliResult r = run({"hh", fixture_path("quiverA.bq"), "--char", "0", "--max", "9"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "characteristic 0\n"
          "HH^0 = 1\nHH^1 = 2\nHH^2 = 0\nHH^3 = 0\nHH^4 = 1\n"
          "HH^5 = 1\nHH^6 = 0\nHH^7 = 0\nHH^8 = 1\nHH^9 = 1\n");
}

TEST_CASE("compare reproduces the reference report") {
    CliResult r = run({"compare", fixture_path("quiverA.bq"), fixture_path("quiverB.bq"), "--m",
                       "2", "--max", "24"});
    CHECK(r.code == 0);
    CHECK(r.out.find("phi(A) = (0,4)* + (3,1)* + (3,3)*\n") != std::string::npos);
    CHECK(r.out.find("phi(B) = (0,4)* + (2,2)* + (4,2)*\n") != std::string::npos);
    CHECK(r.out.find("phi equal: no\n") != std::string::npos);
    CHECK(r.out.find("|Q0|: 7 vs 7 (equal)\n") != std::string::npos);
    CHECK(r.out.find("HH equal (char 0, n <= 24): yes\n") != std::string::npos);
    CHECK(r.out.find("HH equal (char 2, n <= 24): yes\n") != std::string::npos);
    CHECK(r.out.find("HH equal (char 3, n <= 24): yes\n") != std::string::npos);
    CHECK(r.out.find("verdict: same Hochschild data, different AG-invariant: "
                     "not derived equivalent\n") != std::string::npos);
}

TEST_CASE("compare of a quiver with itself withholds judgement") {
    CliResult r = run({"compare", fixture_path("quiverA.bq"), fixture_path("quiverA.bq")});
    CHECK(r.code == 0);
    CHECK(r.out.find("derived equivalence not decided by this tool alone") != std::string::npos);
}

TEST_CASE("generate emits the base Kronecker file") {
    CliResult r = run({"generate", "--m", "1", "--s1", "1", "--s2", "1", "--k1", "0", "--k2",
                       "0", "--r", "0"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "# bound quiver file\n"
          "# rel f g  is the length-2 path f*g with t(f) = s(g)\n"
          "quiver nf_m1_s1_0_1_0_r0\n"
          "vertex v0\nvertex vw\n"
          "arrow ccw0 v0 vw\narrow cw0 v0 vw\n");
}

TEST_CASE("classify on a generated quiver is positive") {
    std::string tmp = "/tmp/qgentle_cli_gen.bq";
    CliResult gen = run({"generate", "--m", "2", "--s1", "2", "--k1", "1", "--s2", "3", "--k2",
                         "1", "-o", tmp});
    CHECK(gen.code == 0);
    CliResult cls = run({"classify", tmp, "--m", "2"});
    CHECK(cls.code == 0);
    CHECK(cls.out.find("A-tilde-branched (m=2): yes") != std::string::npos);
}

TEST_CASE("validate reports violations and signals them in the exit code") {
    CliResult good = run({"validate", fixture_path("quiverA.bq")});
    CHECK(good.code == 0);
    CHECK(good.out.find("gentle: yes") != std::string::npos);
    CHECK(good.out.find("admissible: yes") != std::string::npos);

    std::string star = "/tmp/qgentle_cli_star.bq";
    {
        std::ofstream f(star);
        f << "quiver star\nvertex c x y z\narrow a c x\narrow b c y\narrow d c z\n";
    }
    CliResult bad = run({"validate", star});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("gentle: no") != std::string::npos);
    CHECK(bad.out.find("G1 at c") != std::string::npos);
}

TEST_CASE("domain errors exit 1, usage and parse errors exit 2") {
    std::string star = "/tmp/qgentle_cli_star2.bq";
    {
        std::ofstream f(star);
        f << "quiver star\nvertex c x y z\narrow a c x\narrow b c y\narrow d c z\n";
    }
    CHECK(run({"ag", star}).code == 1);                       // non-gentle input
    CHECK(run({"ag", "/tmp/does_not_exist.bq"}).code == 2);   // unreadable file
    CHECK(run({"frobnicate"}).code == 2);                     // unknown verb
    CHECK(run({"params", fixture_path("quiverA.bq")}).code == 2);  // missing --m
    CHECK(run({"hh", fixture_path("quiverA.bq"), "--char", "6"}).code == 2);
    CHECK(run({"generate", "--m", "2", "--s2", "1", "--r", "1"}).code == 1);

    std::string malformed = "/tmp/qgentle_cli_bad.bq";
    {
        std::ofstream f(malformed);
        f << "quiver q\nvertex v1\narrow a v1 missing\n";
    }
    CliResult r = run({"validate", malformed});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("gerstenhaber verb") {
    CliResult r = run({"gerstenhaber", fixture_path("quiverA.bq"), "--m", "2", "--char", "0"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "cup product nontrivial: yes\n"
          "Lie bracket nontrivial: yes (characteristic 0)\n"
          "witness: (a0 a1 a2 a3) based at v4\n");
    CliResult r5 = run({"gerstenhaber", fixture_path("quiverA.bq"), "--char", "5"});
    CHECK(r5.out.find("cup product nontrivial: yes") != std::string::npos);
    CHECK(r5.out.find("Lie bracket nontrivial: no") != std::string::npos);
}

TEST_CASE("saturated verb") {
    CliResult r = run({"saturated", fixture_path("quiverA.bq"), "--m", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "2-saturated cycles: 1\na0 a1 a2 a3\n");
    CliResult none = run({"saturated", fixture_path("kronecker.bq"), "--m", "3"});
    CHECK(none.out == "3-saturated cycles: 0\n");
}

TEST_CASE("json output carries the documented keys") {
    using nlohmann::json;
    CliResult ag = run({"ag", fixture_path("quiverA.bq"), "--json"});
    json jag = json::parse(ag.out);
    CHECK(jag["phi"]["formatted"] == "(0,4)* + (3,1)* + (3,3)*");
    CHECK(jag["phi"]["pairs"].size() == 3);

    CliResult hh = run({"hh", fixture_path("quiverA.bq"), "--max", "4", "--json"});
    json jhh = json::parse(hh.out);
    CHECK(jhh["hh"]["dims"] == json::array({1, 2, 0, 0, 1}));

    CliResult params = run({"params", fixture_path("quiverA.bq"), "--m", "2", "--json"});
    json jp = json::parse(params.out);
    CHECK(jp["params"]["s2"] == 3);
    CHECK(jp["params"]["k1"] == 1);

    CliResult cls = run({"classify", fixture_path("quiverA.bq"), "--m", "2", "--json"});
    json jc = json::parse(cls.out);
    CHECK(jc["verdicts"]["m_cluster_tilted_atilde"]["verdict"] == true);
    CHECK(jc["verdicts"]["atilde_branched"]["verdict"] == true);
}
