#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "superirr/cli.hpp"

using namespace superirr;

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

}  // namespace

TEST_CASE("certify exit codes and output") {
    auto certified = run({"certify", "x^4+7"});
    CHECK(certified.code == 0);
    CHECK(certified.out.find("Certified") != std::string::npos);

    auto inapplicable = run({"certify", "x^4+3"});
    CHECK(inapplicable.code == 2);
    CHECK(inapplicable.out.find("(1, 1, 2)") != std::string::npos);

    auto unknown = run({"certify", "x^4+16"});
    CHECK(unknown.code == 2);
    CHECK(unknown.out.find("Unknown") != std::string::npos);
}

TEST_CASE("search exit codes") {
    auto hit = run({"search", "x^4+x^2+2*x+3", "--bound", "3", "--rational", "--denom", "2"});
    CHECK(hit.code == 1);
    CHECK(hit.out.find("witness found") != std::string::npos);

    auto miss = run({"search", "x^4+1", "--bound", "2"});
    CHECK(miss.code == 0);
    CHECK(miss.out.find("no witness found") != std::string::npos);
}

TEST_CASE("weak-check and congruence-verify") {
    auto wk = run({"weak-check", "--k", "2", "--bound", "4"});
    CHECK(wk.code == 0);
    CHECK(wk.out.find("all compositions irreducible") != std::string::npos);

    auto cg = run({"congruence-verify", "--k", "2"});
    CHECK(cg.code == 0);
    CHECK(cg.out.find("992") != std::string::npos);
    CHECK(cg.out.find("0 violations") != std::string::npos);
}

TEST_CASE("construct dispatch") {
    auto dom = run({"construct", "x^3+2*x+1", "--method", "domain"});
    CHECK(dom.code == 1);
    CHECK(dom.out.find("-16*x^2 - 8*x") != std::string::npos);

    auto quartic_empty = run({"construct", "x^4+1", "--method", "quartic"});
    CHECK(quartic_empty.code == 2);

    auto naive = run({"construct", "x^2+1", "--method", "naive", "--k", "0"});
    CHECK(naive.code == 1);

    auto bad = run({"construct", "x^2+1", "--method", "domain"});
    CHECK(bad.code == 3);
}

TEST_CASE("factor, compose, disc") {
    auto f = run({"factor", "x^6+1"});
    CHECK(f.code == 0);
    CHECK(f.out.find("x^2 + 1") != std::string::npos);
    CHECK(f.out.find("x^4 - x^2 + 1") != std::string::npos);

    auto c = run({"compose", "x^4+1", "x^2"});
    CHECK(c.code == 0);
    CHECK(c.out.find("x^8 + 1") != std::string::npos);

    auto d = run({"disc", "--trinomial-k", "2"});
    CHECK(d.code == 0);
    CHECK(d.out.find("11317") != std::string::npos);

    auto d2 = run({"disc", "x^3+2*x+1"});
    CHECK(d2.code == 0);
    CHECK(d2.out.find("-59") != std::string::npos);
}

TEST_CASE("JSON output is stable across runs") {
    auto a = run({"certify", "x^4+7", "--format", "json"});
    auto b = run({"certify", "x^4+7", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"status\": \"Certified\"") != std::string::npos);
    CHECK(a.out.find("\"rule\": \"residue-p-mod16\"") != std::string::npos);

    auto s1 = run({"search", "x^3+2*x+1", "--bound", "2", "--format", "json", "--jobs", "1"});
    auto s2 = run({"search", "x^3+2*x+1", "--bound", "2", "--format", "json", "--jobs", "3"});
    CHECK(s1.out == s2.out);
}

TEST_CASE("usage errors exit 3") {
    CHECK(run({"certify"}).code == 3);
    CHECK(run({"certify", "x^^2"}).code == 3);
    CHECK(run({"certify", "x^3+1"}).code == 3);  // wrong shape
    CHECK(run({"nonsense"}).code == 3);
    CHECK(run({}).code == 3);
    CHECK(run({"weak-check", "--k", "1", "--bound", "3"}).code == 3);
}
