// Rank-22 classification and K3 certificates on the worked examples.
#include "doctest.h"

#include "hyperk3/catalog.hpp"
#include "hyperk3/k3class.hpp"

using namespace hk3;

namespace {

IntPoly ct_product(std::initializer_list<long> ks) {
    IntPoly p = IntPoly::constant(1);
    for (long k : ks) p = p * cyclotomic_trace(k);
    return p;
}

std::pair<IntPoly, IntPoly> pair22(const IntPoly& Phi, const IntPoly& Psi) { return pair_from_traces(Phi, Psi, 22); }

}  // namespace

TEST_CASE("rank 22 classification") {
    auto tc = compute_trace_clusters(ct_product({1, 1, 1, 3, 4, 6, 16}), salem_trace(1), RankParity::even);
    auto c = classify_rank22(tc);
    REQUIRE(c.has_value());
    CHECK(c->case_no == 3);
    CHECK(c->eps_index == 16);

    auto small = compute_trace_clusters(IntPoly{1}, IntPoly{1, 1}, RankParity::even);
    CHECK_FALSE(classify_rank22(small).has_value());
}

TEST_CASE("side B certificate, cyclotomic Phi with R1") {
    auto [phi, psi] = pair22(ct_product({1, 1, 1, 3, 4, 6, 16}), salem_trace(1));
    auto r = k3_certificate(phi, psi, Side::B);
    REQUIRE_MESSAGE(r.cert.has_value(), r.reason);
    const auto& c = *r.cert;
    CHECK(c.table == "hyp-B");
    CHECK(c.case_no == 1);
    CHECK(c.hodge_type == HodgeType::hyperbolic);
    CHECK(c.chi0 == psi);
    CHECK(c.chi1 == IntPoly{1});
    CHECK(c.rho == 0);
    AlgebraicReal t = c.special_trace;
    CHECK(agrees_with_printed(t, "-1.667161"));  // y_8 of R_1
    CHECK(c.special_trace.poly == salem_trace(1));
}

TEST_CASE("side A certificate, Lehmer Phi with R1") {
    auto [phi, psi] = pair22(lehmer_trace() * ct_product({4, 20}), salem_trace(1));
    auto r = k3_certificate(phi, psi, Side::A);
    REQUIRE_MESSAGE(r.cert.has_value(), r.reason);
    const auto& c = *r.cert;
    CHECK(c.table == "hyp-A");
    CHECK(c.case_no == 7);
    CHECK(c.hodge_type == HodgeType::hyperbolic);
    CHECK(c.chi0 == lehmer());
    CHECK(c.rho == 12);
    CHECK_FALSE(c.projective);
    AlgebraicReal t = c.special_trace;
    CHECK(agrees_with_printed(t, "-1.88660"));  // x_4
}

TEST_CASE("non-K3 inputs") {
    auto r = k3_certificate(IntPoly{-1, 0, 1}, IntPoly{1, 1, 1}, Side::A);
    CHECK_FALSE(r.cert.has_value());
    CHECK(r.reason.find("rank") != std::string::npos);
    auto [phi, psi] = pair22(ct_product({1, 1, 1, 3, 4, 6, 16}), salem_trace(1));
    // side A fails here: Phi has a triple root at 2
    auto a = k3_certificate(phi, psi, Side::A);
    CHECK_FALSE(a.cert.has_value());
}

TEST_CASE("chi factorization") {
    auto roots = isolate_real_roots(lehmer_trace());
    auto split = chi_factorization(lehmer() * cyclotomic(12), roots[0]);
    CHECK(split.chi0 == lehmer());
    CHECK(split.chi1 == cyclotomic(12));
    CHECK(split.rho == 4);
    auto c12 = isolate_real_roots(cyclotomic_trace(12));
    auto proj = chi_factorization(lehmer() * cyclotomic(12), c12[1]);
    CHECK(proj.projective);
    CHECK(proj.chi0 == cyclotomic(12));
}
