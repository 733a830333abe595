// hyperk3 command dispatch, exit codes and report round trips.
#include "doctest.h"

#include "cli.hpp"
#include "json.hpp"

#include <sstream>

using nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = hk3::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

void check_round_trip(const std::string& text) {
    auto j = ordered_json::parse(text);
    CHECK(j.dump(2) + "\n" == text);
}

}  // namespace

TEST_CASE("cli build") {
    auto r = run({"build", "--phi", "z^2-1", "--psi", "z^2+z+1"});
    REQUIRE(r.code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j["result"]["gram_a"] == ordered_json::parse("[[2,1],[1,2]]"));
    CHECK(j["result"]["disc"] == 3);
    CHECK(j["exit_code"] == 0);
    check_round_trip(r.out);
    CHECK(run({"build", "--phi", "z^2-1", "--psi", "z^2+z+1"}).out == r.out);
}

TEST_CASE("cli certify") {
    auto r = run({"certify", "--phi", "C(1)^3*C(3)*C(4)*C(6)*C(16)", "--psi", "z^11*R(1)@z", "--side", "B"});
    REQUIRE(r.code == 0);
    auto j = ordered_json::parse(r.out);
    const auto& c = j["result"]["certificate"];
    CHECK(c["case"] == 1);
    CHECK(c["table"] == "hyp-B");
    CHECK(c["special_trace"]["position"] == 8);
    CHECK(c["rho"] == 0);
    check_round_trip(r.out);
    // not K3: exit 0 normally, 4 with --strict
    CHECK(run({"certify", "--phi", "z^2-1", "--psi", "z^2+z+1"}).code == 0);
    CHECK(run({"certify", "--phi", "z^2-1", "--psi", "z^2+z+1", "--strict"}).code == 4);
}

TEST_CASE("cli catalog") {
    auto r = run({"catalog"});
    REQUIRE(r.code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j["result"]["count"] == 41);
    CHECK(j["result"]["unramified"] == 15);
    check_round_trip(r.out);
    auto t = run({"catalog", "--format", "tsv"});
    CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 41);
}

TEST_CASE("cli siegel and unit") {
    auto s = run({"siegel", "--tau-from", "R(1)", "--root", "8"});
    REQUIRE(s.code == 0);
    auto j = ordered_json::parse(s.out);
    CHECK(j["result"]["verdicts"][0]["verdict"] == "S");
    check_round_trip(s.out);
    auto b = run({"siegel", "--tau-from", "w^2-2*w-7", "--strict"});
    CHECK(b.code == 4);

    auto u = run({"unit", "--phi", "CT(1)^3*CT(3)*CT(4)*CT(6)*CT(16)", "--psi", "R(1)"});
    REQUIRE(u.code == 0);
    auto ju = ordered_json::parse(u.out);
    CHECK(ju["result"]["U"] == "-w^10 + 6*w^9 - 7*w^8 - 22*w^7 + 54*w^6 - 4*w^5 - 70*w^4 + 36*w^3 + 24*w^2 - 16*w");
    CHECK(ju["result"]["trace_form_matches"] == true);
    auto rec = run({"recover", "--unit", ju["result"]["U"].get<std::string>(), "--salem", "R(1)"});
    CHECK(ordered_json::parse(rec.out)["result"]["Phi_factors"] == "(w - 2)^3 (w + 1) (w) (w - 1) CT16");
}

TEST_CASE("cli errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"build", "--phi", "z^2-"}).code == 2);
    CHECK(run({"build", "--phi", "z^2-", "--psi", "z"}).code == 2);
    CHECK(run({"build", "--phi", "z^2-1", "--psi", "z^2+z+1", "--format", "xml"}).code == 2);
    CHECK(run({"picard", "--phi", "z^2-1", "--psi", "z^2+z+1"}).code == 3);
    CHECK(run({"build", "--phi", "z^2+1", "--psi", "z^2+z+1"}).code == 3);  // phi not anti-palindromic
    CHECK(run({"recover", "--unit", "w", "--salem", "R(1)"}).code == 3);
}

TEST_CASE("cli scan for one Psi") {
    auto r = run({"scan", "--family", "deg22", "--psi", "R7", "--format", "tsv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("R7\t") == 0);
    auto j = run({"scan", "--family", "deg22", "--psi", "R7"});
    std::istringstream lines(j.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        auto e = ordered_json::parse(line);
        CHECK(e["psi"] == "R7");
        CHECK(e.dump() == line);
        ++n;
    }
    CHECK(n == 20);  // 28 printed rows, 8 of them duplicates
    CHECK(run({"scan", "--family", "deg99"}).code == 2);
}
