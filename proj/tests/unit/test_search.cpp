// CT product enumeration, the catalog and a single degree-22 scan.
#include "doctest.h"

#include "../support/fixtures.hpp"
#include "hyperk3/search.hpp"

#include <algorithm>
#include <set>
#include <tuple>

using namespace hk3;
using hk3::testing::parse_ks;
using hk3::testing::read_tsv;

namespace {

bool contains(const std::vector<std::vector<long>>& xs, std::vector<long> v) {
    std::sort(v.begin(), v.end());
    return std::find(xs.begin(), xs.end(), v) != xs.end();
}

}  // namespace

TEST_CASE("CT catalog") {
    auto cat = list_ct_catalog();
    CHECK(cat.size() == 41);
    CHECK(std::count_if(cat.begin(), cat.end(), [](const CtEntry& e) { return e.unramified; }) == 15);
    std::vector<long> deg1, deg6u;
    for (const auto& e : cat) {
        if (e.deg == 1) deg1.push_back(e.k);
        if (e.deg == 6 && e.unramified) deg6u.push_back(e.k);
    }
    CHECK(deg1 == std::vector<long>{1, 2, 3, 4, 6});
    CHECK(deg6u == std::vector<long>{21, 28, 36, 42});
    CHECK(cat.back().deg == 10);
}

TEST_CASE("CT product enumeration") {
    auto zero = enumerate_ct_products(0, MultiplicityRule::sets_only);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    auto five = enumerate_ct_products(5, MultiplicityRule::sets_only);
    CHECK(contains(five, {4, 6, 7}));
    CHECK_FALSE(contains(five, {1, 1, 7}));
    for (const auto& ks : five) {
        int d = 0;
        for (long k : ks) d += ct_degree(k);
        CHECK(d == 5);
        CHECK(std::adjacent_find(ks.begin(), ks.end()) == ks.end());
    }
    auto ten = enumerate_ct_products(10, MultiplicityRule::one_multiple_le3);
    CHECK(contains(ten, {1, 1, 1, 3, 4, 6, 16}));
    CHECK_FALSE(contains(ten, {1, 1, 3, 3, 4, 6, 16}));  // two repeated elements
    CHECK_FALSE(contains(ten, {1, 1, 1, 1, 3, 4, 5}));   // multiplicity four
    CHECK_FALSE(contains(ten, {5, 5, 7}));                // repeated element without an integer root
    std::set<std::vector<long>> uniq(ten.begin(), ten.end());
    CHECK(uniq.size() == ten.size());
}

TEST_CASE("degree-22 scan for R1 matches the table") {
    std::set<std::tuple<int, std::vector<long>, std::string, std::string>> want;
    for (const auto& r : read_tsv("svh.tsv"))
        if (r[0] == "R1") want.insert({std::stoi(r[1]), parse_ks(r[2]), r[3], r[4]});
    CHECK(want.size() == 26);
    auto es = scan_deg22(1);
    std::set<std::tuple<int, std::vector<long>, std::string, std::string>> got;
    for (const auto& e : es) got.insert({e.cert.case_no, e.ks, e.st_label, to_string(e.verdict)});
    CHECK(got == want);
    CHECK(got.size() == es.size());
    // canonical order and determinism
    auto again = scan_deg22(1);
    REQUIRE(again.size() == es.size());
    for (size_t i = 0; i < es.size(); ++i) CHECK(again[i].ks == es[i].ks);
}

TEST_CASE("position from the top inside (-2,2)") {
    auto roots = isolate_real_roots(salem_trace(1));
    CHECK(position_from_top(roots[0]) == 10);
    CHECK(position_from_top(roots[9]) == 1);
}
