#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "latpoly/cli.hpp"
#include "latpoly/json_io.hpp"

using latpoly::Json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = latpoly::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

const std::string kRowsC3 = "--rows=-1,2,2;2,-1,2;2,2,-1";
const std::string kRowsC1 = "--rows=1,0,0;0,1,0;0,0,1";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate prints the cube record") {
    const CliResult r = run_cli({"generate", kRowsC3});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);
    const Json j = Json::parse(lines[0]);
    CHECK(j.at("ell") == 3);
    CHECK(j.at("rows") == Json::parse("[[-1,2,2],[2,-1,2],[2,2,-1]]"));
    CHECK(j.at("divisors").at("d") == Json::parse("[1,1,1]"));
    CHECK(j.at("divisors").at("D") == Json::parse("[3,1,1,1]"));
    CHECK(j.at("irreducible") == true);
    CHECK(j.at("self_dual") == true);
}

TEST_CASE("generate from the other sources") {
    const CliResult rod = run_cli({"generate", "--rodrigues", "2,1,0,0"});
    REQUIRE(rod.code == 0);
    CHECK(Json::parse(rod.out).at("ell") == 5);
    const CliResult pyt = run_cli({"generate", "--pythagorean", "4,3,5"});
    REQUIRE(pyt.code == 0);
    CHECK(Json::parse(pyt.out).at("ell") == 5);
}

TEST_CASE("generate enumerates a side") {
    const CliResult r = run_cli({"generate", "--side", "13"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    for (const std::string& line : lines) CHECK(Json::parse(line).at("ell") == 13);
}

TEST_CASE("generate csv") {
    const CliResult r = run_cli({"generate", "--side", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "ell,rows,d1,d2,d3,D1,D2,D3,D4,lambda1,lambda2,mu1,self_dual");
    CHECK(lines[1].substr(0, 2) == "3,");
}

TEST_CASE("generate rejects contradictory sources") {
    CHECK(run_cli({"generate", kRowsC3, "--side", "3"}).code == 2);
    CHECK(run_cli({"generate"}).code == 2);
    CHECK(run_cli({"generate", kRowsC3, "--rodrigues", "1,0,0,0"}).code == 2);
}

TEST_CASE("count a dilated octahedron") {
    const CliResult r = run_cli({"count", kRowsC1, "--shape", "octa", "--t", "2"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("t") == 2);
    CHECK(j.at("closed") == 25);
    CHECK(j.at("interior") == 7);
    CHECK(j.at("boundary") == 18);
}

TEST_CASE("count output formats") {
    const CliResult csv = run_cli(
        {"count", kRowsC3, "--shape", "cube", "--t", "1", "--format", "csv"});
    REQUIRE(csv.code == 0);
    const auto lines = lines_of(csv.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "t,closed,interior,boundary");
    CHECK(lines[1] == "1,40,20,20");

    const CliResult pretty = run_cli(
        {"count", kRowsC3, "--shape", "cube", "--t", "1", "--format", "pretty"});
    REQUIRE(pretty.code == 0);
    CHECK(pretty.out ==
          "cube ell=3 t=1: closed=40 interior=20 boundary=20\n");
}

TEST_CASE("count validates its arguments") {
    CHECK(run_cli({"count", kRowsC1, "--t", "0"}).code == 2);
    CHECK(run_cli({"count", kRowsC1, "--shape", "pyramid"}).code == 2);
    CHECK(run_cli({"count", "--shape", "cube", "--t", "1"}).code == 2);
    CHECK(run_cli({"count", "--rows=1,1,0;0,1,1;1,0,1", "--t", "1"}).code == 2);
    CHECK(run_cli({"count", kRowsC1, "--shape", "tetra", "--which", "3"}).code == 2);
}

TEST_CASE("ehrhart for a cube matches its closed form") {
    const CliResult r = run_cli({"ehrhart", kRowsC3});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("match") == true);
    CHECK(j.at("closed_form") == j.at("fitted"));
    CHECK(j.at("fitted").at("c3") == "27");
    CHECK(j.at("fitted").at("c2") == "9");
}

TEST_CASE("ehrhart for a tetrahedron leaves c1 open") {
    const CliResult r = run_cli({"ehrhart", kRowsC1, "--shape", "tetra"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("match") == true);
    CHECK(j.at("closed_form").at("c1").is_null());
    CHECK(j.at("closed_form").at("c3") == "1/3");
    CHECK(j.at("fitted").at("c1") == "5/3");
}

TEST_CASE("ehrhart rejects csv") {
    CHECK(run_cli({"ehrhart", kRowsC3, "--format", "csv"}).code == 2);
}

TEST_CASE("verify passes on the small catalog") {
    const CliResult r = run_cli({"verify", "--ell-max", "3"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines.size() == 18);  // 2 cubes x 9 reports
    for (const std::string& line : lines) {
        const Json j = Json::parse(line);
        CHECK(j.at("pass") == true);
        CHECK(j.at("checks").is_array());
    }
}

TEST_CASE("verify output is independent of the thread count") {
    const CliResult one = run_cli({"verify", "--ell-max", "5", "--threads", "1"});
    const CliResult many = run_cli({"verify", "--ell-max", "5", "--threads", "3"});
    REQUIRE(one.code == 0);
    REQUIRE(many.code == 0);
    CHECK(one.out == many.out);
}

TEST_CASE("census per side") {
    const CliResult r = run_cli({"census", "--ell", "13"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("ell") == 13);
    CHECK(j.at("count") == 2);
    CHECK(j.at("polynomials").size() == 2);
    CHECK(run_cli({"census"}).code == 2);  // --ell is required
}

TEST_CASE("conjecture scan subcommand") {
    const CliResult clean = run_cli({"search", "--conjecture", "--ell-max", "5"});
    REQUIRE(clean.code == 0);
    const Json j = Json::parse(clean.out);
    CHECK(j.at("cubes_checked") == 3);
    CHECK(j.at("violations").empty());

    const CliResult hit = run_cli(
        {"search", "--conjecture", "--ell-max", "5", "--with-counterexample"});
    REQUIRE(hit.code == 0);
    const Json k = Json::parse(hit.out);
    REQUIRE(k.at("violations").size() == 1);
    CHECK(k.at("violations")[0].at("row_gcd_sum") == 35);
    CHECK(k.at("violations")[0].at("col_gcd_sum") == 7);
}

TEST_CASE("all-divisors search subcommand") {
    const CliResult r = run_cli({"search", "--all-divisors-gt1", "--ell", "9"});
    REQUIRE(r.code == 0);
    CHECK(lines_of(r.out).empty());
    CHECK(run_cli({"search", "--all-divisors-gt1"}).code == 2);
    CHECK(run_cli({"search"}).code == 2);
    CHECK(run_cli({"search", "--all-divisors-gt1", "--conjecture", "--ell", "9"}).code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    const CliResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("latpoly") != std::string::npos);
    CHECK(help.out.find("generate") != std::string::npos);
}

}  // TEST_SUITE
