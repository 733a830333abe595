#include "hyperk3/numfield.hpp"

#include "hyperk3/catalog.hpp"

#include <stdexcept>

namespace hk3 {

IntPoly chebyshev_P(int j) {
    if (j < 0) throw std::invalid_argument("chebyshev_P: negative index");
    IntPoly prev{2}, cur = IntPoly::x();
    if (j == 0) return prev;
    for (int i = 1; i < j; ++i) {
        IntPoly next = IntPoly::x() * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

IntPoly rem_int(const IntPoly& g, const IntPoly& R) {
    if (R.lc() != 1) throw std::invalid_argument("R must be monic");
    IntPoly q, r;
    divmod(g, R, q, r);
    return r;
}

}  // namespace

Int bracket(const IntPoly& g, const IntPoly& R) { return rem_int(g, R).coeff(R.deg() - 1); }

UnitData unit_from_gram(const std::vector<Int>& row, const IntPoly& R) {
    int N = R.deg();
    if (N < 1 || R.lc() != 1) throw std::invalid_argument("unit_from_gram: R must be monic of positive degree");
    if (static_cast<int>(row.size()) != N) throw std::invalid_argument("unit_from_gram: need N Gram values");
    if (row[0] % 2 != 0) throw std::invalid_argument("unit_from_gram: (r, r) is odd");
    UnitData d;
    d.R = R;
    d.c = IntMat(N, N);
    for (int j = 1; j <= N; ++j)
        for (int k = 1; k <= N; ++k) d.c(j - 1, k - 1) = bracket(chebyshev_P(j - 1) * IntPoly::monomial(N - k), R);
    for (int j = 1; j <= N; ++j) {
        if (d.c(j - 1, j - 1) != (j == 1 ? 2 : 1)) throw std::logic_error("unit_from_gram: diagonal of c is wrong");
        for (int k = j + 1; k <= N; ++k)
            if (d.c(j - 1, k - 1) != 0) throw std::logic_error("unit_from_gram: c is not lower triangular");
    }
    d.u.resize(N);
    d.u[0] = row[0] / 2;
    for (int j = 2; j <= N; ++j) {
        Int v = row[j - 1];
        for (int k = 1; k < j; ++k) v -= d.c(j - 1, k - 1) * d.u[k - 1];
        d.u[j - 1] = v;
    }
    std::vector<Int> coeffs(N);
    for (int j = 1; j <= N; ++j) coeffs[N - j] = d.u[j - 1];
    d.U = IntPoly(coeffs);
    return d;
}

IntMat trace_form_gram(const IntPoly& U, const IntPoly& R) {
    int n = 2 * R.deg();
    std::vector<Int> by_gap(n);
    for (int m = 0; m < n; ++m) by_gap[m] = bracket(U * chebyshev_P(m), R);
    IntMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = by_gap[std::abs(i - j)];
    return g;
}

IntMat multiplication_matrix(const IntPoly& U, const IntPoly& R) {
    int N = R.deg();
    IntMat m(N, N);
    for (int j = 0; j < N; ++j) {
        IntPoly col = rem_int(U * IntPoly::monomial(j), R);
        for (int i = 0; i < N; ++i) m(i, j) = col.coeff(i);
    }
    return m;
}

std::vector<AlgebraicReal> compatible_roots(const IntPoly& U, const IntPoly& R) {
    std::vector<AlgebraicReal> out;
    IntPoly dR = derivative(R);
    for (auto& r : isolate_real_roots(R)) {
        if (compare(r, Rat(-2)) <= 0 || compare(r, Rat(2)) >= 0) continue;
        if (sign_at(U, r) * sign_at(dR, r) > 0) out.push_back(r);
    }
    return out;
}

UnitCheck verify_unit(const IntPoly& U, const IntPoly& R, const std::optional<AlgebraicReal>& tau) {
    if (U.deg() >= R.deg()) return {false, "deg U >= deg R"};
    if (U.zero()) return {false, "U is zero"};
    if (abs(det_bareiss(multiplication_matrix(U, R))) != 1) return {false, "det(M_U) != +-1"};
    if (tau) {
        AlgebraicReal t = *tau;
        if (sign_at(R, t) != 0) return {false, "tau is not a root of R"};
        if (sign_at(U, t) * sign_at(derivative(R), t) <= 0) return {false, "U(tau) R'(tau) <= 0"};
        if (compatible_roots(U, R).size() != 1) return {false, "compatible root in (-2,2) is not unique"};
    }
    return {true, ""};
}

IntPoly recover_phi(const IntPoly& U, const IntPoly& S) {
    IntPoly R = palindromic_to_trace(S);
    int n = S.deg();
    IntMat G = trace_form_gram(U, R);
    Int e = G(0, 0);
    if (e != 2 && e != -2) throw std::invalid_argument("recover_phi: (1, 1)_S must be +-2");
    // C v = v - 2 (v, 1) / (1, 1) 1
    IntMat C = IntMat::identity(n);
    for (int j = 0; j < n; ++j) C(0, j) -= 2 * G(0, j) / e;
    IntMat A = companion(S) * C;
    IntPoly phi = charpoly(A);
    return trace_polynomial_pair(phi, S).Phi;
}

}  // namespace hk3
