#include "hyperk3/realroot.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hk3 {

Sturm::Sturm(const IntPoly& f) {
    seq_.push_back(primitive(f));
    if (f.deg() < 1) return;
    seq_.push_back(primitive(derivative(f)));
    while (true) {
        auto r = rem_q(seq_[seq_.size() - 2], seq_.back());
        if (r.empty()) break;
        // -rem, scaled by a positive constant to integer coefficients
        Int l = 1;
        for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Int> c;
        for (const auto& x : r) c.emplace_back(-x.get_num() * (l / x.get_den()));
        IntPoly p(std::move(c));
        Int g = content(p);
        for (auto& x : p.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        seq_.push_back(std::move(p));
        if (seq_.back().deg() == 0) break;
    }
}

int Sturm::variations(const Rat& x) const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int Sturm::count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }

namespace {

Rat cauchy_bound(const IntPoly& f) {
    Int m = 0;
    for (int i = 0; i < f.deg(); ++i) m = std::max(m, Int(abs(f.c[i])));
    Rat b = Rat(m, abs(f.lc())) + 1;
    Rat p = 1;
    while (p < b) p *= 2;
    return p;
}

// Move a candidate split point off the roots of f, staying inside (lo, hi).
Rat nonroot_near(const IntPoly& f, Rat m, const Rat& lo, const Rat& hi) {
    Rat step = (hi - lo) / 64;
    int k = 1;
    while (sign_at(f, m) == 0) {
        Rat cand = m + step * k;
        if (cand >= hi) cand = m - step * k;
        if (sign_at(f, cand) != 0 && cand > lo && cand < hi) return cand;
        step /= 2;
        ++k;
    }
    return m;
}

void isolate_rec(const IntPoly& f, const Sturm& st, const Rat& lo, const Rat& hi, int n,
                 int mult, std::vector<AlgebraicReal>& out) {
    if (n == 0) return;
    if (n == 1) {
        AlgebraicReal a;
        a.poly = f;
        a.lo = lo;
        a.hi = hi;
        a.mult = mult;
        out.push_back(std::move(a));
        return;
    }
    Rat m = nonroot_near(f, (lo + hi) / 2, lo, hi);
    int left = st.count(lo, m);
    isolate_rec(f, st, lo, m, left, mult, out);
    isolate_rec(f, st, m, hi, n - left, mult, out);
}

}  // namespace

std::vector<AlgebraicReal> isolate_squarefree(const IntPoly& sqf, int mult) {
    std::vector<AlgebraicReal> out;
    IntPoly f = primitive(sqf);
    if (f.deg() < 1) return out;
    Sturm st(f);
    Rat b = cauchy_bound(f);
    Rat lo = nonroot_near(f, -b, -b - 1, -b + 1);
    Rat hi = nonroot_near(f, b, b - 1, b + 1);
    isolate_rec(f, st, lo, hi, st.count(lo, hi), mult, out);
    return out;
}

std::vector<AlgebraicReal> isolate_real_roots(const IntPoly& f) {
    std::vector<AlgebraicReal> all;
    for (auto& [g, i] : squarefree_decomposition(f)) {
        auto part = isolate_squarefree(g, i);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    // distinct factors of the decomposition share no roots
    std::vector<AlgebraicReal*> ptrs;
    for (auto& a : all) ptrs.push_back(&a);
    auto perm = sort_distinct(ptrs);
    std::vector<AlgebraicReal> out;
    for (size_t i : perm) out.push_back(all[i]);
    return out;
}

void AlgebraicReal::bisect() {
    Rat m = mid();
    int s = sign_at(poly, m);
    if (s == 0) {
        // rational root found exactly: shrink symmetrically around it
        Rat w = (hi - lo) / 4;
        lo = m - w;
        hi = m + w;
        return;
    }
    if (s == sign_at(poly, lo)) lo = m; else hi = m;
}

void AlgebraicReal::refine(const Rat& width) {
    while (hi - lo >= width) bisect();
}

double AlgebraicReal::approx() const { return mid().get_d(); }

std::string AlgebraicReal::decimal(int digits) {
    Rat scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // refine until both endpoints round to the same integer multiple of 10^-digits
    auto round_at = [&](const Rat& x) {
        Rat y = x * scale + Rat(1, 2);
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
        return f;
    };
    int guard = 0;
    while (round_at(lo) != round_at(hi) && guard < 400) {
        bisect();
        ++guard;
    }
    Int v = round_at(mid());
    bool neg = v < 0;
    Int mag = abs(v);
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    std::string out = (neg ? "-" : "") + s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return out;
}

int compare(AlgebraicReal& a, const Rat& x) {
    while (true) {
        if (a.hi <= x) return -1;
        if (a.lo >= x) return 1;
        if (sign_at(a.poly, x) == 0) return 0;
        a.bisect();
    }
}

bool equal(AlgebraicReal& a, AlgebraicReal& b) {
    Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo >= hi) return false;
    IntPoly g = gcd(a.poly, b.poly);
    if (g.deg() < 1) return false;
    // lo and hi are endpoints of a or b, hence non-roots of g
    return Sturm(g).count(lo, hi) > 0;
}

int compare(AlgebraicReal& a, AlgebraicReal& b) {
    bool checked = false;
    while (true) {
        if (a.hi <= b.lo) return -1;
        if (b.hi <= a.lo) return 1;
        if (!checked) {
            if (equal(a, b)) return 0;
            checked = true;
        }
        if (a.hi - a.lo >= b.hi - b.lo) a.bisect(); else b.bisect();
    }
}

int sign_at(const IntPoly& g, AlgebraicReal& a) {
    if (g.zero()) return 0;
    if (g.deg() == 0) return sgn(g.c[0]);
    IntPoly h = gcd(a.poly, g);
    if (h.deg() >= 1 && Sturm(h).count(a.lo, a.hi) > 0) return 0;
    IntPoly gs = squarefree_part(g);
    Sturm st(gs);
    while (true) {
        if (sign_at(gs, a.lo) != 0 && sign_at(gs, a.hi) != 0 && st.count(a.lo, a.hi) == 0)
            return sign_at(g, a.mid()) != 0 ? sign_at(g, a.mid()) : sign_at(g, a.lo);
        a.bisect();
    }
}

std::vector<size_t> sort_distinct(std::vector<AlgebraicReal*>& xs) {
    size_t n = xs.size();
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) { return xs[i]->lo < xs[j]->lo; });
        bool ok = true;
        for (size_t k = 0; k + 1 < n; ++k) {
            auto* a = xs[idx[k]];
            auto* b = xs[idx[k + 1]];
            if (a->hi > b->lo) {
                ok = false;
                if (a->hi - a->lo >= b->hi - b->lo) a->bisect(); else b->bisect();
            }
        }
        if (ok) return idx;
    }
}

std::string interval_string(const AlgebraicReal& a) {
    return "(" + a.lo.get_str() + ", " + a.hi.get_str() + ")";
}

std::pair<Rat, int> parse_decimal(const std::string& s) {
    size_t dot = s.find('.');
    std::string digits = s;
    int d = 0;
    if (dot != std::string::npos) {
        d = static_cast<int>(s.size() - dot - 1);
        digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    Int den = 1;
    for (int i = 0; i < d; ++i) den *= 10;
    Rat v(Int(digits, 10), den);
    v.canonicalize();
    return {v, d};
}

bool agrees_with_printed(AlgebraicReal& a, const std::string& printed) {
    auto [v, d] = parse_decimal(printed);
    Rat tol(1);
    for (int i = 0; i < d; ++i) tol /= 10;
    return compare(a, v - tol) > 0 && compare(a, v + tol) < 0;
}

}  // namespace hk3
