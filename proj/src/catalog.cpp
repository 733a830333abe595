#include "hyperk3/catalog.hpp"

#include "hyperk3/realroot.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hk3 {

long totient(long k) {
    long r = k, m = k;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

namespace {

int mobius(long k) {
    int mu = 1;
    for (long p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        k /= p;
        if (k % p == 0) return 0;
        mu = -mu;
    }
    if (k > 1) mu = -mu;
    return mu;
}

}  // namespace

IntPoly cyclotomic(long k, CycloConvention conv) {
    if (k < 1) throw std::invalid_argument("cyclotomic index must be positive");
    if (conv == CycloConvention::squared && k <= 2) return pow(IntPoly{k == 1 ? -1 : 1, 1}, 2);
    // C_k = prod_{d | k} (z^d - 1)^{mu(k/d)}
    IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
    for (long d = 1; d <= k; ++d) {
        if (k % d) continue;
        int mu = mobius(k / d);
        if (mu == 0) continue;
        IntPoly f = IntPoly::monomial(static_cast<int>(d)) - IntPoly::constant(1);
        (mu > 0 ? num : den) = (mu > 0 ? num : den) * f;
    }
    return exact_div(num, den);
}

int ct_degree(long k) { return k <= 2 ? 1 : static_cast<int>(totient(k) / 2); }

IntPoly cyclotomic_trace(long k) {
    return palindromic_to_trace(cyclotomic(k, CycloConvention::squared));
}

IntPoly trace_to_palindromic(const IntPoly& P) {
    if (P.zero()) return P;
    int d = P.deg();
    IntPoly q = IntPoly{1, 0, 1};  // z^2 + 1
    IntPoly r, qi = IntPoly::constant(1);
    for (int i = 0; i <= d; ++i) {
        r = r + P.c[i] * shift_up(qi, d - i);
        qi = qi * q;
    }
    return r;
}

IntPoly palindromic_to_trace(const IntPoly& f) {
    if (f.zero() || f.deg() % 2 != 0 || palindrome_class(f) != Palindromy::palindromic)
        throw std::invalid_argument("expected a palindromic polynomial of even degree");
    int m = f.deg() / 2;
    IntPoly g = f;
    std::vector<Int> t(m + 1);
    IntPoly q = IntPoly{1, 0, 1};
    for (int i = m; i >= 0; --i) {
        t[i] = g.coeff(m + i);
        if (t[i] != 0) g = g - t[i] * shift_up(pow(q, i), m - i);
    }
    if (!g.zero()) throw std::logic_error("palindromic_to_trace: nonzero remainder");
    return IntPoly(std::move(t));
}

IntPoly lehmer() { return IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

IntPoly lehmer_trace() {
    // (w+1)(w^2-1)(w^2-4) - 1
    return IntPoly{1, 1} * IntPoly{-1, 0, 1} * IntPoly{-4, 0, 1} - IntPoly::constant(1);
}

IntPoly mt_poly() {
    // (w+1)(w-2)(w^3-w^2-4w+1) - 1
    return IntPoly{1, 1} * IntPoly{-2, 1} * IntPoly{1, -4, -1, 1} - IntPoly::constant(1);
}

IntPoly nt_poly() {
    // (w^2-2w-2)(w^3-3w+1) - 1
    return IntPoly{-2, -2, 1} * IntPoly{1, -3, 0, 1} - IntPoly::constant(1);
}

IntPoly salem_trace(int i) {
    const IntPoly w = IntPoly::x();
    const IntPoly wm1{-1, 1}, wp1{1, 1}, w2m4{-4, 0, 1}, one = IntPoly::constant(1);
    const IntPoly wp1sq = wp1 * wp1;
    switch (i) {
    case 1: return w * wm1 * wp1sq * w2m4 * IntPoly{-2, 8, 0, -6, 0, 1} - one;
    case 2: return wp1 * w2m4 * IntPoly{1, 0, -12, 3, 19, -1, -8, 0, 1} - one;
    case 3: return w * wm1 * wp1sq * w2m4 * IntPoly{1, 8, -1, -6, 0, 1} - one;
    case 4: return w * w * wp1 * w2m4 * IntPoly{-1, 1, 1} * IntPoly{5, 3, -5, -1, 1} - one;
    case 5: return wm1 * wp1sq * w2m4 * IntPoly{-1, 2, 12, -1, -7, 0, 1} - one;
    case 6: return w * wp1sq * w2m4 * IntPoly{-1, 1, 1} * IntPoly{-1, 6, -3, -2, 1} - one;
    case 7: return wp1 * w2m4 * IntPoly{2, 0, -14, 2, 19, -1, -8, 0, 1} - one;
    case 8: return w * wp1sq * w2m4 * IntPoly{-2, -6, 13, 5, -7, -1, 1} - one;
    case 9: return w * wp1 * w2m4 * IntPoly{-8, -20, 9, 25, -2, -9, 0, 1} - one;
    case 10: return w * wp1sq * IntPoly{-3, 0, 1} * w2m4 * IntPoly{1, 2, -4, -1, 1} - one;
    default: throw std::invalid_argument("R(i) needs 1 <= i <= 10");
    }
}

std::vector<long> lehmer_family_ks(int i) {
    static const std::vector<std::vector<long>> ks{{21}, {28}, {36}, {42}, {12, 15}, {12, 20}, {12, 24}, {12, 30}};
    if (i < 1 || i > 8) throw std::invalid_argument("LNF(i) needs 1 <= i <= 8");
    return ks[i - 1];
}

IntPoly lehmer_family(int i) {
    IntPoly r = lehmer_trace();
    for (long k : lehmer_family_ks(i)) r = r * cyclotomic_trace(k);
    return r;
}

namespace {

// f / (z - a) for a = +-1, exact
IntPoly strip_linear(const IntPoly& f, long a, const char* what) {
    IntPoly q, r;
    divmod(f, IntPoly{-a, 1}, q, r);
    if (!r.zero()) throw std::invalid_argument(what);
    return q;
}

}  // namespace

TracePair trace_polynomial_pair(const IntPoly& phi, const IntPoly& psi) {
    if (phi.deg() != psi.deg() || phi.deg() < 1)
        throw std::invalid_argument("deg phi = deg psi >= 1 required");
    if (phi.c[0] == 0 || psi.c[0] == 0) throw std::invalid_argument("phi(0) psi(0) != 0 required");
    if (palindrome_class(phi) != Palindromy::anti_palindromic)
        throw std::invalid_argument("phi must satisfy z^n phi(1/z) = -phi(z) (anti-palindromic)");
    if (palindrome_class(psi) != Palindromy::palindromic)
        throw std::invalid_argument("psi must satisfy z^n psi(1/z) = psi(z) (palindromic)");
    TracePair tp;
    tp.n = phi.deg();
    if (tp.n % 2 == 0) {
        IntPoly a = strip_linear(strip_linear(phi, 1, "phi(1) = 0 violated"), -1, "phi(-1) = 0 violated");
        tp.Phi = palindromic_to_trace(a);
        tp.Psi = palindromic_to_trace(psi);
    } else {
        tp.Phi = palindromic_to_trace(strip_linear(phi, 1, "phi(1) = 0 violated"));
        tp.Psi = palindromic_to_trace(strip_linear(psi, -1, "psi(-1) = 0 violated"));
    }
    return tp;
}

std::pair<IntPoly, IntPoly> pair_from_traces(const IntPoly& Phi, const IntPoly& Psi, int n) {
    int N = n / 2;
    if (n % 2 == 0) {
        if (Phi.deg() != N - 1 || Psi.deg() != N) throw std::invalid_argument("trace degrees do not match rank");
        return {IntPoly{-1, 0, 1} * trace_to_palindromic(Phi), trace_to_palindromic(Psi)};
    }
    if (Phi.deg() != N || Psi.deg() != N) throw std::invalid_argument("trace degrees do not match rank");
    return {IntPoly{-1, 1} * trace_to_palindromic(Phi), IntPoly{1, 1} * trace_to_palindromic(Psi)};
}

std::pair<Int, Int> resultant_relation(const IntPoly& phi, const IntPoly& psi) {
    TracePair tp = trace_polynomial_pair(phi, psi);
    Int lhs = resultant(phi, psi);
    int N = tp.n / 2;
    Int r = resultant(tp.Phi, tp.Psi);
    Int sgn_ = (N % 2 == 0) ? 1 : -1;
    Int rhs;
    if (tp.n % 2 == 0)
        rhs = sgn_ * eval(tp.Psi, Int(2)) * eval(tp.Psi, Int(-2)) * r * r;
    else
        rhs = 2 * sgn_ * eval(tp.Psi, Int(2)) * eval(tp.Phi, Int(-2)) * r * r;
    return {lhs, rhs};
}

bool is_unramified(const IntPoly& P, Variable v) {
    long a = v == Variable::w ? 2 : 1;
    return abs(eval(P, Int(a))) == 1 && abs(eval(P, Int(-a))) == 1;
}

bool is_salem_trace(const IntPoly& P) {
    if (P.deg() < 1 || abs(P.lc()) != 1) return false;
    if (squarefree_part(P).deg() != P.deg()) return false;
    auto roots = isolate_squarefree(P);
    if (static_cast<int>(roots.size()) != P.deg()) return false;
    int above = 0;
    for (auto& r : roots) {
        if (compare(r, Rat(2)) > 0) ++above;
        else if (compare(r, Rat(2)) == 0 || compare(r, Rat(-2)) <= 0) return false;
    }
    return above == 1;
}

namespace {

// Largest k worth trying for a cyclotomic factor of degree <= d: phi(k) >= sqrt(k/2).
long cyclo_bound(int d) { return std::max<long>(2, 2L * d * d); }

}  // namespace

FactorList classify_product(const IntPoly& f) {
    FactorList out;
    IntPoly g = f;
    for (long k = 1; k <= cyclo_bound(f.deg()) && g.deg() >= 1; ++k) {
        if (totient(k) > g.deg()) continue;
        IntPoly c = cyclotomic(k);
        int m = 0;
        while (g.deg() >= c.deg() && divides(c, g)) {
            g = exact_div(g, c);
            ++m;
        }
        if (m) out.push_back({c, m, FactorTag::cyclotomic, k});
    }
    if (g.deg() >= 1) {
        for (auto& [h, m] : squarefree_decomposition(g)) {
            Factor fa{h, m, FactorTag::other, 0};
            if (h.deg() % 2 == 0 && palindrome_class(h) == Palindromy::palindromic &&
                is_salem_trace(palindromic_to_trace(h)))
                fa.tag = FactorTag::salem;
            out.push_back(fa);
        }
    }
    return out;
}

FactorList classify_trace_product(const IntPoly& P) {
    FactorList out;
    IntPoly g = P;
    for (long k = 1; k <= cyclo_bound(2 * P.deg()) && g.deg() >= 1; ++k) {
        if (ct_degree(k) > g.deg()) continue;
        IntPoly c = cyclotomic_trace(k);
        int m = 0;
        while (g.deg() >= c.deg() && divides(c, g)) {
            g = exact_div(g, c);
            ++m;
        }
        if (m) out.push_back({c, m, FactorTag::cyclotomic, k});
    }
    if (g.deg() >= 1) {
        for (auto& [h, m] : squarefree_decomposition(g))
            out.push_back({h, m, is_salem_trace(h) ? FactorTag::salem_trace : FactorTag::other, 0});
    }
    return out;
}

std::string factor_string(const FactorList& fl, char var) {
    std::ostringstream os;
    bool first = true;
    for (const auto& fa : fl) {
        if (!first) os << " ";
        first = false;
        if (fa.tag == FactorTag::cyclotomic && fa.poly.deg() > 2)
            os << (var == 'w' ? "CT" : "C") << fa.k;
        else
            os << "(" << to_string(fa.poly, var) << ")";
        if (fa.mult != 1) os << "^" << fa.mult;
    }
    return os.str();
}

std::vector<CtEntry> ct_catalog(int max_deg) {
    std::vector<CtEntry> out;
    for (long k = 1; k <= cyclo_bound(2 * max_deg); ++k) {
        int d = ct_degree(k);
        if (d > max_deg) continue;
        out.push_back({k, d, is_unramified(cyclotomic_trace(k), Variable::w)});
    }
    std::stable_sort(out.begin(), out.end(), [](const CtEntry& a, const CtEntry& b) { return a.deg < b.deg; });
    return out;
}

}  // namespace hk3
