#include "hyperk3/poly.hpp"

#include "hyperk3/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hk3 {

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(const Int& a) { return IntPoly(std::vector<Int>{a}); }

IntPoly IntPoly::monomial(int deg, const Int& a) {
    std::vector<Int> v(deg + 1);
    v[deg] = a;
    return IntPoly(std::move(v));
}

Int IntPoly::coeff(int i) const {
    if (i < 0 || i > deg()) return 0;
    return c[i];
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<Int> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return IntPoly(std::move(r));
}

IntPoly operator*(const Int& k, const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c) x *= k;
    r.trim();
    return r;
}

IntPoly pow(const IntPoly& a, unsigned e) {
    IntPoly r = IntPoly::constant(1), b = a;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

IntPoly derivative(const IntPoly& f) {
    if (f.deg() < 1) return {};
    std::vector<Int> r(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r[i - 1] = f.c[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
    IntPoly r;
    for (int i = f.deg(); i >= 0; --i) r = r * g + IntPoly::constant(f.c[i]);
    return r;
}

IntPoly reversed(const IntPoly& f) {
    std::vector<Int> r(f.c.rbegin(), f.c.rend());
    return IntPoly(std::move(r));
}

IntPoly shift_up(const IntPoly& f, int k) {
    if (f.zero()) return f;
    std::vector<Int> r(k, Int(0));
    r.insert(r.end(), f.c.begin(), f.c.end());
    return IntPoly(std::move(r));
}

Int eval(const IntPoly& f, const Int& x) {
    Int r = 0;
    for (int i = f.deg(); i >= 0; --i) r = r * x + f.c[i];
    return r;
}

Rat eval(const IntPoly& f, const Rat& x) {
    Rat r = 0;
    for (int i = f.deg(); i >= 0; --i) r = r * x + f.c[i];
    r.canonicalize();
    return r;
}

int sign_at(const IntPoly& f, const Rat& x) {
    // sum c_i p^i q^(d-i) has the sign of f(p/q) for q > 0
    if (f.zero()) return 0;
    const Int& p = x.get_num();
    const Int& q = x.get_den();
    Int r = 0, qp = 1;
    for (int i = f.deg(); i >= 0; --i) {
        r = r * p + f.c[i] * qp;
        qp *= q;
    }
    return sgn(r);
}

Int content(const IntPoly& f) {
    Int g = 0;
    for (const auto& x : f.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntPoly primitive(const IntPoly& f) {
    if (f.zero()) return f;
    Int g = content(f);
    if (f.lc() < 0) g = -g;
    IntPoly r = f;
    for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

void divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
    if (b.zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Int> rr = a.c;
    int db = b.deg();
    int dq = a.deg() - db;
    std::vector<Int> qq(dq >= 0 ? dq + 1 : 0);
    const Int& l = b.lc();
    for (int i = dq; i >= 0; --i) {
        Int t = rr[i + db];
        if (t == 0) continue;
        if (!mpz_divisible_p(t.get_mpz_t(), l.get_mpz_t()))
            throw std::domain_error("non-integral polynomial quotient");
        t /= l;
        qq[i] = t;
        for (int j = 0; j <= db; ++j) rr[i + j] -= t * b.c[j];
    }
    q = IntPoly(std::move(qq));
    r = IntPoly(std::move(rr));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    IntPoly q, r;
    divmod(a, b, q, r);
    if (!r.zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

bool divides(const IntPoly& b, const IntPoly& a) {
    IntPoly q, r;
    try {
        divmod(a, b, q, r);
    } catch (const std::domain_error&) {
        return false;
    }
    return r.zero();
}

namespace {

using QPoly = std::vector<Rat>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPoly& f) { return QPoly(f.c.begin(), f.c.end()); }

IntPoly from_q(const QPoly& p) {
    // clear denominators, then make primitive
    Int l = 1;
    for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> r;
    r.reserve(p.size());
    for (const auto& x : p) r.emplace_back(x.get_num() * (l / x.get_den()));
    return primitive(IntPoly(std::move(r)));
}

QPoly qrem(QPoly a, const QPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    Rat inv = 1 / b.back();
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0) continue;
        Rat t = a[i] * inv;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
    }
    a.resize(std::min(a.size(), static_cast<size_t>(db)));
    qtrim(a);
    return a;
}

}  // namespace

std::vector<Rat> rem_q(const IntPoly& a, const IntPoly& b) { return qrem(to_q(a), to_q(b)); }

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    // Primitive remainder sequence keeps coefficients small.
    IntPoly x = primitive(a), y = primitive(b);
    if (x.zero()) return y;
    if (y.zero()) return x;
    if (x.deg() < y.deg()) std::swap(x, y);
    while (!y.zero()) {
        IntPoly r = from_q(qrem(to_q(x), to_q(y)));
        x = std::move(y);
        y = std::move(r);
    }
    return primitive(x);
}

namespace {

QPoly qmonic(QPoly p) {
    qtrim(p);
    if (p.empty()) return p;
    Rat l = p.back();
    for (auto& x : p) x /= l;
    return p;
}

QPoly qderiv(const QPoly& p) {
    QPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
    qtrim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

QPoly qdiv(const QPoly& a, const QPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    int dq = static_cast<int>(a.size()) - 1 - db;
    if (dq < 0) return {};
    QPoly r = a, q(dq + 1);
    Rat inv = 1 / b.back();
    for (int i = dq; i >= 0; --i) {
        Rat t = r[i + db] * inv;
        q[i] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) r[i + j] -= t * b[j];
    }
    qtrim(q);
    return q;
}

QPoly qgcd(QPoly a, QPoly b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly r = qrem(a, b);
        a = std::move(b);
        b = qmonic(std::move(r));
    }
    return qmonic(a);
}

}  // namespace

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    // Yun's algorithm over Q.
    std::vector<std::pair<IntPoly, int>> out;
    if (f.deg() < 1) return out;
    QPoly a = qmonic(to_q(f));
    QPoly ad = qderiv(a);
    QPoly g = qgcd(a, ad);
    QPoly b = qdiv(a, g);
    QPoly c = qdiv(ad, g);
    QPoly d = qsub(c, qderiv(b));
    int i = 1;
    while (b.size() > 1) {
        QPoly h = qgcd(b, d);
        if (h.size() > 1) out.emplace_back(from_q(h), i);
        b = qdiv(b, h);
        c = qdiv(d, h);
        d = qsub(c, qderiv(b));
        ++i;
    }
    return out;
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.deg() < 1) return primitive(f);
    QPoly a = to_q(f);
    return from_q(qdiv(a, qgcd(a, qderiv(a))));
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.zero() || g.zero()) return 0;
    QPoly a = to_q(f), b = to_q(g);
    Rat acc = 1;
    while (true) {
        int da = static_cast<int>(a.size()) - 1;
        int db = static_cast<int>(b.size()) - 1;
        if (db == 0) {
            Rat p = 1;
            for (int i = 0; i < da; ++i) p *= b[0];
            acc *= p;
            break;
        }
        if (da == 0) {
            Rat p = 1;
            for (int i = 0; i < db; ++i) p *= a[0];
            acc *= p;
            break;
        }
        QPoly r = qrem(a, b);
        if (r.empty()) return 0;
        int dr = static_cast<int>(r.size()) - 1;
        if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
        Rat p = 1;
        for (int i = 0; i < da - dr; ++i) p *= b.back();
        acc *= p;
        a = std::move(b);
        b = std::move(r);
    }
    acc.canonicalize();
    if (acc.get_den() != 1) throw std::logic_error("resultant is not integral");
    return acc.get_num();
}

Int resultant_sylvester(const IntPoly& f, const IntPoly& g) {
    int m = f.deg(), n = g.deg();
    if (m < 0 || n < 0) return 0;
    if (m + n == 0) return 1;
    IntMat s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s(i, i + j) = f.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s(n + i, i + j) = g.c[n - j];
    return det_bareiss(s);
}

Palindromy palindrome_class(const IntPoly& f) {
    IntPoly r = reversed(f);
    if (r.deg() != f.deg()) return Palindromy::neither;
    if (r == f) return Palindromy::palindromic;
    if (r == -f) return Palindromy::anti_palindromic;
    return Palindromy::neither;
}

Int power_sum_from_elementary(const std::vector<Int>& e, int m) {
    // p_k = sum_{i<k} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k
    auto E = [&](int i) -> Int { return i <= static_cast<int>(e.size()) ? e[i - 1] : Int(0); };
    std::vector<Int> p(m + 1);
    for (int k = 1; k <= m; ++k) {
        Int s = 0;
        for (int i = 1; i < k; ++i) {
            Int t = E(i) * p[k - i];
            if (i % 2 == 1) s += t; else s -= t;
        }
        Int t = E(k) * k;
        if (k % 2 == 1) s += t; else s -= t;
        p[k] = s;
    }
    return p[m];
}

Int newton_power_sum(const IntPoly& f, int m) {
    if (f.zero() || f.lc() != 1) throw std::invalid_argument("newton_power_sum needs a monic polynomial");
    int n = f.deg();
    std::vector<Int> e(n);
    for (int i = 1; i <= n; ++i) {
        e[i - 1] = f.c[n - i];
        if (i % 2 == 1) e[i - 1] = -e[i - 1];
    }
    return power_sum_from_elementary(e, m);
}

Int trace(const IntPoly& f) {
    if (f.deg() < 1) return 0;
    return -f.c[f.deg() - 1] / f.lc();
}

std::string to_string(const IntPoly& f, char var) {
    if (f.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.deg(); i >= 0; --i) {
        const Int& a = f.c[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << mag;
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace hk3
