#include "doctest.h"

#include "hyperk3/matrix.hpp"

#include <random>

using namespace hk3;

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (auto& r : rows) {
        int j = 0;
        for (long v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

// det(xI - M) by interpolation at integer points with Bareiss determinants.
IntPoly charpoly_oracle(const IntMat& m) {
    int n = m.rows;
    std::vector<Rat> xs, ys;
    for (int t = 0; t <= n; ++t) {
        IntMat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = (i == j ? Int(t) : Int(0)) - m(i, j);
        xs.emplace_back(t);
        ys.emplace_back(det_bareiss(a));
    }
    // Vandermonde solve
    RatMat v(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        Rat p = 1;
        for (int j = 0; j <= n; ++j) {
            v(i, j) = p;
            p *= xs[i];
        }
    }
    auto c = solve(v, ys);
    std::vector<Int> out;
    for (auto& x : c) {
        REQUIRE(x.get_den() == 1);
        out.push_back(x.get_num());
    }
    return IntPoly(std::move(out));
}

}  // namespace

TEST_CASE("companion and charpoly") {
    IntMat a = companion(IntPoly{-1, 0, 1});
    CHECK(a == from_rows({{0, 1}, {1, 0}}));
    IntMat c = from_rows({{-1, -1}, {0, 1}});
    CHECK(charpoly(a * c) == IntPoly({1, 1, 1}));

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + t % 7;
        IntMat m(n, n);
        for (auto& x : m.a) x = d(rng);
        CHECK(charpoly(m) == charpoly_oracle(m));
    }
    IntPoly f{3, -1, 4, 1, -5, 9, 1};
    CHECK(charpoly(companion(f)) == f);
    CHECK(poly_eval(f, companion(f)) == IntMat(6, 6));
}

TEST_CASE("signature") {
    CHECK(signature(from_rows({{2, 1}, {1, 2}})) == std::make_pair(2, 0));
    CHECK(signature(from_rows({{0, 1}, {1, 0}})) == std::make_pair(1, 1));
    CHECK(signature(from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}})) == std::make_pair(1, 2));
    CHECK_THROWS(signature(from_rows({{1, 1}, {1, 1}})));
}

TEST_CASE("determinant and inverse") {
    IntMat m = from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(det_bareiss(m) == 4);
    RatMat inv = inverse(to_rat(m));
    CHECK(inv(0, 0) == Rat(3, 4));
}
