#include "hyperk3/hyplattice.hpp"

#include "hyperk3/catalog.hpp"

#include <stdexcept>

namespace hk3 {

namespace {

IntMat gram_from_series(const std::vector<Int>& xi, int n) {
    IntMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = i == j ? Int(2) : xi[std::abs(i - j) - 1];
    return g;
}

void check_pair(const IntPoly& phi, const IntPoly& psi) {
    if (phi.deg() < 1 || phi.deg() != psi.deg())
        throw std::invalid_argument("phi and psi must have the same positive degree");
    if (phi.lc() != 1 || psi.lc() != 1) throw std::invalid_argument("phi and psi must be monic");
    if (palindrome_class(phi) != Palindromy::anti_palindromic)
        throw std::invalid_argument("phi must be anti-palindromic");
    if (palindrome_class(psi) != Palindromy::palindromic)
        throw std::invalid_argument("psi must be palindromic");
    if (resultant(phi, psi) == 0) throw std::invalid_argument("phi and psi have a common root");
}

}  // namespace

std::vector<Int> taylor_coeffs(const IntPoly& phi, const IntPoly& psi, int count) {
    if (phi.deg() != psi.deg()) throw std::invalid_argument("taylor_coeffs: degree mismatch");
    if (phi.zero() || phi.lc() != 1) throw std::invalid_argument("taylor_coeffs: phi must be monic");
    int n = phi.deg();
    // with t = 1/z: (psi - phi)/phi = rhat(t) / phihat(t), phihat(0) = 1
    IntPoly r = psi - phi;
    std::vector<Int> rhat(count + 1), phat(n + 1);
    for (int k = 0; k <= n; ++k) phat[k] = phi.coeff(n - k);
    for (int k = 1; k <= count && k <= n; ++k) rhat[k] = r.coeff(n - k);
    std::vector<Int> out(count + 1);
    for (int i = 1; i <= count; ++i) {
        Int v = rhat[i];
        for (int k = 1; k <= n && k <= i; ++k) v -= phat[k] * out[i - k];
        out[i] = v;
    }
    return std::vector<Int>(out.begin() + 1, out.end());
}

HgLattice build_lattice(const IntPoly& phi, const IntPoly& psi) {
    check_pair(phi, psi);
    HgLattice L;
    L.phi = phi;
    L.psi = psi;
    L.n = phi.deg();
    int n = L.n;
    L.gram_A = gram_from_series(taylor_coeffs(phi, psi, n), n);
    L.mat_A = companion(phi);
    // C v = v - (v, r) r with r = e_0
    L.mat_C = IntMat::identity(n);
    for (int j = 0; j < n; ++j) L.mat_C(0, j) -= L.gram_A(0, j);
    L.mat_B = L.mat_A * L.mat_C;
    L.disc = det_bareiss(L.gram_A);
    IntMat P = b_basis_change(L);
    L.gram_B = transpose(P) * L.gram_A * P;
    return L;
}

IntMat b_basis_change(const HgLattice& L) {
    int n = L.n;
    IntMat P(n, n);
    IntVec v(n);
    v[0] = 1;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) P(i, j) = v[i];
        v = L.mat_B * v;
    }
    return P;
}

bool is_unimodular(const IntPoly& phi, const IntPoly& psi) {
    if (phi.deg() % 2 == 1) return false;
    bool direct = abs(resultant(phi, psi)) == 1;
    // trace-side test: Psi(2), Psi(-2), Res(Phi, Psi) all units
    TracePair tp = trace_polynomial_pair(phi, psi);
    bool via_trace = abs(eval(tp.Psi, Int(2))) == 1 && abs(eval(tp.Psi, Int(-2))) == 1 &&
                     abs(resultant(tp.Phi, tp.Psi)) == 1;
    if (direct != via_trace) throw std::logic_error("is_unimodular: resultant tests disagree");
    return direct;
}

std::pair<int, int> signature_oracle(const IntMat& gram) {
    for (int i = 0; i < gram.rows; ++i)
        for (int j = 0; j < i; ++j)
            if (gram(i, j) != gram(j, i)) throw std::invalid_argument("signature_oracle: not symmetric");
    return signature(gram);
}

}  // namespace hk3
