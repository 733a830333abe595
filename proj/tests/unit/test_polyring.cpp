// Polynomial arithmetic, cyclotomics, trace conversion, root isolation.
#include "doctest.h"

#include "hyperk3/catalog.hpp"
#include "hyperk3/matrix.hpp"
#include "hyperk3/parser.hpp"
#include "hyperk3/realroot.hpp"

#include <cmath>
#include <random>

using namespace hk3;

namespace {

// Independent oracle: C_k = (z^k - 1) / prod_{d | k, d < k} C_d.
IntPoly cyclo_oracle(long k) {
    IntPoly num = IntPoly::monomial(static_cast<int>(k)) - IntPoly::constant(1);
    for (long d = 1; d < k; ++d)
        if (k % d == 0) num = exact_div(num, cyclo_oracle(d));
    return num;
}

IntPoly random_monic(std::mt19937& rng, int deg, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<Int> c(deg + 1);
    for (int i = 0; i < deg; ++i) c[i] = d(rng);
    c[deg] = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1, CycloConvention::squared) == IntPoly({1, -2, 1}));
    CHECK(cyclotomic(2, CycloConvention::squared) == IntPoly({1, 2, 1}));
    CHECK(cyclotomic(3) == IntPoly({1, 1, 1}));
    CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
    for (long k = 1; k <= 60; ++k) CHECK(cyclotomic(k) == cyclo_oracle(k));
    CHECK_THROWS(cyclotomic(0));
}

TEST_CASE("cyclotomic trace polynomials") {
    CHECK(cyclotomic_trace(1) == IntPoly({-2, 1}));
    CHECK(cyclotomic_trace(2) == IntPoly({2, 1}));
    CHECK(cyclotomic_trace(12) == IntPoly({-3, 0, 1}));
    for (long k = 1; k <= 100; ++k) {
        IntPoly ct = cyclotomic_trace(k);
        CHECK(ct.deg() == ct_degree(k));
        CHECK(trace_to_palindromic(ct) == cyclotomic(k, CycloConvention::squared));
    }
}

TEST_CASE("resultants") {
    CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{1, 1, 1}) == 3);
    IntPoly f{3, -1, 0, 2, 1};
    CHECK(resultant(f, f) == 0);
    CHECK(resultant(cyclotomic_trace(3), cyclotomic_trace(6)) == -2);
    CHECK(resultant_sylvester(cyclotomic_trace(3), cyclotomic_trace(6)) == -2);

    std::mt19937 rng(20240611);
    for (int t = 0; t < 60; ++t) {
        IntPoly a = random_monic(rng, 1 + t % 5, 4), b = random_monic(rng, 1 + t % 4, 4),
                c = random_monic(rng, 1 + t % 6, 4);
        CHECK(resultant(a, c) == resultant_sylvester(a, c));
        CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
    }
}

TEST_CASE("apostol criterion on small indices") {
    auto prime_power = [](long x) {
        if (x < 2) return false;
        long p = 2;
        while (x % p) ++p;
        while (x % p == 0) x /= p;
        return x == 1;
    };
    for (long k = 2; k <= 30; ++k)
        for (long m = 1; m < k; ++m) {
            Int r = resultant(cyclotomic_trace(k), cyclotomic_trace(m));
            bool unit = abs(r) == 1;
            bool expect = !(k % m == 0 && prime_power(k / m));
            CHECK_MESSAGE(unit == expect, "k=" << k << " m=" << m << " res=" << r);
        }
}

TEST_CASE("palindrome classes") {
    CHECK(palindrome_class(IntPoly{1, 1, 1}) == Palindromy::palindromic);
    CHECK(palindrome_class(IntPoly{-1, 0, 1}) == Palindromy::anti_palindromic);
    CHECK(palindrome_class(IntPoly{0, 1, 1}) == Palindromy::neither);
}

TEST_CASE("trace polynomial pairs") {
    auto tp = trace_polynomial_pair(IntPoly{-1, 0, 1}, IntPoly{1, 1, 1});
    CHECK(tp.Phi == IntPoly({1}));
    CHECK(tp.Psi == IntPoly({1, 1}));

    IntPoly phi = IntPoly{-1, 0, 1} * IntPoly{1, 0, 0, 0, 0, 0, 0, 0, 1};
    auto lt = trace_polynomial_pair(phi, lehmer());
    CHECK(lt.Psi == lehmer_trace());
    auto back = pair_from_traces(lt.Phi, lt.Psi, 10);
    CHECK(back.first == phi);
    CHECK(back.second == lehmer());

    CHECK_THROWS_AS(trace_polynomial_pair(IntPoly{1, 1, 1}, IntPoly{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("resultant relation") {
    auto [l, r] = resultant_relation(IntPoly{-1, 0, 1}, IntPoly{1, 1, 1});
    CHECK(l == 3);
    CHECK(r == 3);
    // odd rank: phi = (z-1)(z^2+az+1), psi = (z+1)(z^2+bz+1)
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            IntPoly phi = IntPoly{-1, 1} * IntPoly{1, a, 1};
            IntPoly psi = IntPoly{1, 1} * IntPoly{1, b, 1};
            auto [x, y] = resultant_relation(phi, psi);
            CHECK(x == resultant_sylvester(phi, psi));
            CHECK(x == y);
        }
}

TEST_CASE("real root isolation") {
    auto lt = isolate_real_roots(lehmer_trace());
    REQUIRE(lt.size() == 5);
    // printed values are truncated, not rounded
    CHECK(lt[0].decimal(6) == "-1.886610");
    CHECK(agrees_with_printed(lt[0], "-1.88660"));
    CHECK(agrees_with_printed(lt[1], "-1.46887"));
    CHECK(agrees_with_printed(lt[2], "-0.584663"));
    CHECK(agrees_with_printed(lt[3], "0.913731"));
    CHECK(agrees_with_printed(lt[4], "2.02642"));
    CHECK_FALSE(agrees_with_printed(lt[3], "0.913733"));

    auto dbl = isolate_real_roots(IntPoly{4, -4, 1});
    REQUIRE(dbl.size() == 1);
    CHECK(dbl[0].mult == 2);
    CHECK(compare(dbl[0], Rat(2)) == 0);

    auto s3 = isolate_real_roots(IntPoly{-3, 0, 1});
    REQUIRE(s3.size() == 2);
    CHECK(s3[0].hi <= s3[1].lo);
    s3[1].refine(Rat(1, 1000000));
    CHECK(std::fabs(s3[1].approx() - std::sqrt(3.0)) < 1e-6);

    // root count with multiplicity matches the degree for a product of real-rooted factors
    IntPoly f = pow(IntPoly{-1, 1}, 3) * IntPoly{-3, 0, 1} * pow(IntPoly{2, 1}, 2);
    int total = 0;
    auto rs = isolate_real_roots(f);
    for (auto& r : rs) total += r.mult;
    CHECK(total == f.deg());
    for (size_t i = 0; i + 1 < rs.size(); ++i) CHECK(rs[i].hi <= rs[i + 1].lo);
}

TEST_CASE("algebraic sign evaluation") {
    auto s3 = isolate_real_roots(IntPoly{-3, 0, 1});
    CHECK(sign_at(IntPoly{-3, 0, 1}, s3[1]) == 0);
    CHECK(sign_at(IntPoly{-2, 1}, s3[1]) < 0);            // sqrt3 - 2
    CHECK(sign_at(IntPoly{-17, 10}, s3[1]) > 0);          // 10 sqrt3 - 17
    CHECK(sign_at(IntPoly{-3, 0, 1} * IntPoly{-1, 1}, s3[0]) == 0);
}

TEST_CASE("classify products") {
    IntPoly f = pow(IntPoly{-1, 1}, 9) * IntPoly{1, 1} * IntPoly{1, 0, 1} * lehmer();
    auto fl = classify_product(f);
    REQUIRE(fl.size() == 4);
    CHECK((fl[0].k == 1 && fl[0].mult == 9));
    CHECK((fl[1].k == 2 && fl[1].mult == 1));
    CHECK((fl[2].k == 4 && fl[2].mult == 1));
    CHECK(fl[3].tag == FactorTag::salem);
    CHECK(fl[3].poly == lehmer());

    auto c3 = classify_product(IntPoly{1, 1, 1});
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].k == 3);

    auto o = classify_product(IntPoly{-3, 0, 1});
    REQUIRE(o.size() == 1);
    CHECK(o[0].tag == FactorTag::other);
}

TEST_CASE("newton power sums") {
    CHECK(power_sum_from_elementary({7, 20, 29}, 3) == 10);
    CHECK(newton_power_sum(IntPoly::monomial(6), 3) == 0);
    IntPoly f{-6, 11, -6, 1};  // roots 1, 2, 3
    CHECK(newton_power_sum(f, 1) == 6);
    CHECK(newton_power_sum(f, 2) == 14);
    CHECK(newton_power_sum(f, 3) == 36);
}

TEST_CASE("unramified") {
    CHECK(is_unramified(lehmer_trace(), Variable::w));
    CHECK(is_unramified(cyclotomic_trace(12), Variable::w));
    CHECK_FALSE(is_unramified(cyclotomic_trace(5), Variable::w));
    CHECK(is_unramified(lehmer(), Variable::z));
    for (int i = 1; i <= 10; ++i) {
        IntPoly r = salem_trace(i);
        CHECK(r.deg() == 11);
        CHECK(is_unramified(r, Variable::w));
        CHECK(is_salem_trace(r));
        CHECK(trace(r) == -1);
    }
}

TEST_CASE("trace of palindromic and trace polynomial agree") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 50; ++t) {
        int m = 1 + t % 6;
        std::vector<Int> c(m + 1);
        for (int i = 0; i < m; ++i) c[i] = d(rng);
        c[m] = 1;
        IntPoly P(std::move(c));
        CHECK(trace(trace_to_palindromic(P)) == trace(P));
        CHECK(palindromic_to_trace(trace_to_palindromic(P)) == P);
    }
}

TEST_CASE("ct catalog") {
    auto cat = ct_catalog(10);
    CHECK(cat.size() == 41);
    int unr = 0;
    for (auto& e : cat) unr += e.unramified;
    CHECK(unr == 15);
}

TEST_CASE("parser") {
    CHECK(parse_poly("z^2-1").poly == IntPoly({-1, 0, 1}));
    CHECK(parse_poly("z^2 + z + 1").var == 'z');
    CHECK(parse_poly("CT(12)").poly == IntPoly({-3, 0, 1}));
    CHECK(parse_poly("(w+1)*(w^2-1)*(w^2-4)-1").poly == lehmer_trace());
    CHECK(parse_poly("LT@z").poly == lehmer());
    CHECK(parse_poly("z^11*R(1)@z").poly == trace_to_palindromic(salem_trace(1)));
    CHECK(parse_poly("R(1)@z").poly == trace_to_palindromic(salem_trace(1)));
    CHECK(parse_poly("-w+2").poly == IntPoly({2, -1}));
    CHECK(parse_poly("C(1)^3*C(3)").poly.deg() == 8);
    CHECK_THROWS_AS(parse_poly("z*w"), ParseError);
    CHECK_THROWS_AS(parse_poly("Q(3)"), ParseError);
    CHECK_THROWS_AS(parse_poly("R(11)"), ParseError);
    CHECK_THROWS_AS(parse_poly("z^2+"), ParseError);
}
