#include "hyperk3/matrix.hpp"

#include <stdexcept>

namespace hk3 {

IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& a = x(i, k);
            if (a == 0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += a * y(k, j);
        }
    return r;
}

IntMat operator+(const IntMat& x, const IntMat& y) {
    IntMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

IntMat operator-(const IntMat& x, const IntMat& y) {
    IntMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

IntMat transpose(const IntMat& m) {
    IntMat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
    return r;
}

IntVec operator*(const IntMat& m, const IntVec& v) {
    IntVec r(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (v[j] != 0) r[i] += m(i, j) * v[j];
    return r;
}

Int dot(const IntVec& u, const IntVec& v) {
    Int s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Int bilinear(const IntMat& g, const IntVec& u, const IntVec& v) { return dot(u, g * v); }

IntMat companion(const IntPoly& f) {
    int n = f.deg();
    if (n < 1 || f.lc() != 1) throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
    IntMat m(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -f.c[i];
    return m;
}

IntMat poly_eval(const IntPoly& p, const IntMat& m) {
    int n = m.rows;
    IntMat r(n, n);
    for (int k = p.deg(); k >= 0; --k) {
        r = r * m;
        for (int i = 0; i < n; ++i) r(i, i) += p.c[k];
    }
    return r;
}

Int det_bareiss(IntMat m) {
    int n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntPoly charpoly(const IntMat& m) {
    // Berkowitz: the characteristic polynomial as a product of Toeplitz matrices,
    // accumulated as coefficient vectors (highest degree first).
    int n = m.rows;
    std::vector<Int> v{Int(1)};
    for (int r = 0; r < n; ++r) {
        // Leading r x r block A, row R = m(r, 0..r-1), column C = m(0..r-1, r), a = m(r, r).
        // Column of the Toeplitz matrix: 1, -a, -R C, -R A C, ..., -R A^(r-1) C.
        std::vector<Int> col(r + 2);
        col[0] = 1;
        col[1] = -m(r, r);
        std::vector<Int> x(r);
        for (int i = 0; i < r; ++i) x[i] = m(i, r);
        for (int k = 2; k <= r + 1; ++k) {
            Int s = 0;
            for (int i = 0; i < r; ++i) s += m(r, i) * x[i];
            col[k] = -s;
            if (k <= r) {
                std::vector<Int> y(r);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        if (x[j] != 0) y[i] += m(i, j) * x[j];
                x = std::move(y);
            }
        }
        // v_new = T * v where T is (r+2) x (r+1) lower-triangular Toeplitz with first column col
        std::vector<Int> w(r + 2);
        for (int i = 0; i < r + 2; ++i)
            for (int j = 0; j <= std::min(i, r); ++j)
                if (i - j < static_cast<int>(col.size())) w[i] += col[i - j] * v[j];
        v = std::move(w);
    }
    // v holds coefficients of det(xI - M) from x^n down to x^0
    std::vector<Int> c(n + 1);
    for (int i = 0; i <= n; ++i) c[n - i] = v[i];
    return IntPoly(std::move(c));
}

std::vector<Rat> ldl_pivots(const IntMat& g) {
    int n = g.rows;
    RatMat a = to_rat(g);
    std::vector<Rat> piv;
    for (int k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int j = k + 1; j < n; ++j)
                if (a(j, j) != 0) { p = j; break; }
            if (p >= 0) {
                for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
                for (int j = 0; j < n; ++j) std::swap(a(j, k), a(j, p));
            } else {
                int q = -1;
                for (int j = k + 1; j < n; ++j)
                    if (a(k, j) != 0) { q = j; break; }
                if (q < 0) throw std::domain_error("degenerate symmetric matrix");
                // replace basis vector k by e_k + e_q; new diagonal is 2 a(k,q)
                for (int j = 0; j < n; ++j) a(k, j) += a(q, j);
                for (int j = 0; j < n; ++j) a(j, k) += a(j, q);
            }
        }
        const Rat d = a(k, k);
        piv.push_back(d);
        for (int i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / d;
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
        for (int j = k + 1; j < n; ++j) a(k, j) = 0;
        for (int i = k + 1; i < n; ++i) a(i, k) = 0;
    }
    return piv;
}

std::pair<int, int> signature(const IntMat& g) {
    int p = 0, q = 0;
    for (const auto& d : ldl_pivots(g)) (d > 0 ? p : q)++;
    return {p, q};
}

RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i];
    return r;
}

std::vector<Rat> solve(const RatMat& m, const std::vector<Rat>& b) {
    int n = m.rows;
    RatMat a = m;
    std::vector<Rat> x = b;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw std::domain_error("singular system");
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(x[k], x[p]);
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            x[i] -= f * x[k];
        }
    }
    for (int i = 0; i < n; ++i) x[i] /= a(i, i);
    return x;
}

RatMat inverse(const RatMat& m) {
    int n = m.rows;
    RatMat r(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> e(n);
        e[j] = 1;
        auto col = solve(m, e);
        for (int i = 0; i < n; ++i) r(i, j) = col[i];
    }
    return r;
}

}  // namespace hk3
