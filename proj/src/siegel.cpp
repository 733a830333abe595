#include "hyperk3/siegel.hpp"

#include "hyperk3/catalog.hpp"

#include <stdexcept>

namespace hk3 {

std::string to_string(QLabel l) {
    switch (l) {
        case QLabel::fixed_point: return "fixed_point";
        case QLabel::e8a2a2: return "e8a2a2";
        case QLabel::d10: return "d10";
        case QLabel::a2: return "a2";
    }
    return "?";
}

QLabel parse_qlabel(const std::string& s) {
    for (QLabel l : {QLabel::fixed_point, QLabel::e8a2a2, QLabel::d10, QLabel::a2})
        if (to_string(l) == s) return l;
    throw std::invalid_argument("unknown q label: " + s);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::S: return "S";
        case Verdict::H: return "H";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "?";
}

QFunction builtin_q(QLabel label) {
    IntPoly w = IntPoly::x();
    IntPoly cube = compose(IntPoly{0, -3, 0, 1}, w);  // w^3 - 3w
    switch (label) {
        case QLabel::fixed_point: return {pow(IntPoly{1, 1}, 2), IntPoly{2, 1}, label};
        case QLabel::a2: return {pow(IntPoly{-3, 0, 1}, 2), IntPoly{2, 1}, label};
        case QLabel::e8a2a2:
        case QLabel::d10: {
            IntPoly top = label == QLabel::e8a2a2 ? mt_poly() : nt_poly();
            IntPoly num = IntPoly{2, 1} * pow(IntPoly{-1, 1}, 2) * pow(compose(top, cube), 2);
            return {num, pow(compose(lehmer_trace(), cube), 2), label};
        }
    }
    throw std::invalid_argument("builtin_q: bad label");
}

int q_sign_at(const QFunction& q, AlgebraicReal& x, const Int& c) {
    int d = sign_at(q.denominator, x);
    if (d == 0) throw std::domain_error("q has a pole at tau");
    return sign_at(q.numerator - c * q.denominator, x) * d;
}

SiegelVerdict siegel_test(const AlgebraicReal& tau_in, const QFunction& q) {
    SiegelVerdict v;
    v.tau = tau_in;
    if (!is_salem_trace(v.tau.poly)) throw std::invalid_argument("siegel_test: tau is not a Salem trace");
    v.q_sign = q_sign_at(q, v.tau);
    v.q_minus4_sign = q_sign_at(q, v.tau, 4);
    if (v.q_sign == 0 || v.q_minus4_sign == 0) {
        v.reason = "q(tau) lies on the boundary {0, 4}";
        return v;
    }
    if (v.q_minus4_sign > 0 || v.q_sign < 0) {
        v.verdict = Verdict::H;
        v.witness = v.tau;
        v.reason = v.q_sign < 0 ? "q(tau) < 0" : "q(tau) > 4";
        return v;
    }
    for (auto& c : isolate_squarefree(v.tau.poly)) {
        if (compare(c, Rat(-2)) <= 0 || compare(c, Rat(2)) >= 0) continue;
        if (q_sign_at(q, c, 4) > 0) {
            v.verdict = Verdict::S;
            v.witness = c;
            v.reason = "0 < q(tau) < 4 and a conjugate has q > 4";
            return v;
        }
    }
    v.reason = "0 < q(tau) < 4 but no conjugate in (-2,2) has q > 4";
    return v;
}

namespace {

// sign of x - (1 - 2 sqrt 2)
int cmp_tau0(AlgebraicReal& x) {
    if (compare(x, Rat(1)) >= 0) return 1;
    // x < 1: x > tau0 iff (x - 1)^2 < 8
    int s = sign_at(IntPoly{-7, -2, 1}, x);
    return -s;
}

}  // namespace

Verdict threshold_classify_deg22(const AlgebraicReal& tau_in) {
    AlgebraicReal tau = tau_in;
    Verdict v = Verdict::H;
    int c = cmp_tau0(tau);
    if (c == 0) {
        v = Verdict::indeterminate;
    } else if (c > 0) {
        for (auto& r : isolate_squarefree(tau.poly))
            if (compare(r, Rat(-2)) > 0 && cmp_tau0(r) < 0) v = Verdict::S;
    }
    Verdict check = siegel_test(tau_in, builtin_q(QLabel::fixed_point)).verdict;
    if (check != v) throw std::logic_error("threshold rule disagrees with the q(w) test");
    return v;
}

namespace {

RatFunc add(const RatFunc& a, const RatFunc& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
RatFunc sub(const RatFunc& a, const RatFunc& b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }

// P(z + 1/z) = (z^d P(z + 1/z)) / z^d
RatFunc at_trace(const IntPoly& P) { return {trace_to_palindromic(P), IntPoly::monomial(P.deg())}; }

RatFunc mul(const RatFunc& a, const RatFunc& b) { return {a.num * b.num, a.den * b.den}; }

}  // namespace

bool rational_equal(const RatFunc& a, const RatFunc& b) {
    if (a.den.zero() || b.den.zero()) throw std::domain_error("zero denominator");
    return a.num * b.den == b.num * a.den;
}

RatFunc fixed_point_difference(const std::vector<int>& arm_terms) {
    RatFunc d{IntPoly{1, 1}, IntPoly{1}};
    for (int j : arm_terms) {
        // z / (1 + z - z^-j - z^(j+1)) = z^(j+1) / (z^j + z^(j+1) - 1 - z^(2j+1))
        IntPoly den = IntPoly::monomial(j) + IntPoly::monomial(j + 1) - IntPoly{1} - IntPoly::monomial(2 * j + 1);
        d = sub(d, {IntPoly::monomial(j + 1), den});
    }
    // fixed curve: z(z+1)/(z-1)^2
    d = sub(d, {IntPoly{0, 1, 1}, pow(IntPoly{-1, 1}, 2)});
    return d;
}

bool verify_D_identity(const std::vector<int>& arm_terms) {
    RatFunc d = fixed_point_difference(arm_terms);
    IntPoly zp1{1, 1};
    RatFunc closed_z{lehmer(), zp1 * cyclotomic(1, CycloConvention::squared) * cyclotomic(3) * cyclotomic(5)};
    // z LT(w) / ((z+1) CT1(w) CT3(w) CT5(w)), w = z + 1/z
    RatFunc top = mul({IntPoly::x(), IntPoly{1}}, at_trace(lehmer_trace()));
    RatFunc bottom = mul({zp1, IntPoly{1}}, mul(at_trace(cyclotomic_trace(1)),
                                                mul(at_trace(cyclotomic_trace(3)), at_trace(cyclotomic_trace(5)))));
    RatFunc closed_w{top.num * bottom.den, top.den * bottom.num};
    return rational_equal(d, closed_z) && rational_equal(d, closed_w);
}

}  // namespace hk3
