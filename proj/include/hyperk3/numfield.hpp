// Hypergeometric lattices as lattices in Salem number fields.
#pragma once

#include "hyperk3/matrix.hpp"
#include "hyperk3/poly.hpp"
#include "hyperk3/realroot.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk3 {

// P_j(z + 1/z) = z^j + z^-j
IntPoly chebyshev_P(int j);

// Coefficient of w^(N-1) in g mod R, N = deg R.
Int bracket(const IntPoly& g, const IntPoly& R);

struct UnitData {
    IntPoly U, R;
    std::vector<Int> u;  // u_1..u_N
    IntMat c;            // c(j-1, k-1) = [P_{j-1} w^{N-k}]_R
};

// gram_row[j-1] = (F^{j-1} r, r) for j = 1..N.
UnitData unit_from_gram(const std::vector<Int>& gram_row, const IntPoly& R);

// (z^i, z^j)_S = [U P_|i-j|]_R on the power basis 1, z, ..., z^(2N-1).
IntMat trace_form_gram(const IntPoly& U, const IntPoly& R);

// Multiplication by U on Z[w]/(R), power basis.
IntMat multiplication_matrix(const IntPoly& U, const IntPoly& R);

struct UnitCheck {
    bool ok = false;
    std::string failed;  // first failed clause
};
// det(M_U) = +-1; with tau, U(tau) R'(tau) > 0 and tau the only such root in (-2,2).
UnitCheck verify_unit(const IntPoly& U, const IntPoly& R, const std::optional<AlgebraicReal>& tau = std::nullopt);

// Roots tau of R in (-2,2) with U(tau) R'(tau) > 0.
std::vector<AlgebraicReal> compatible_roots(const IntPoly& U, const IntPoly& R);

// Trace polynomial Phi of A = M_z C, C the reflection in 1 for the form of U on Z[z]/(S).
IntPoly recover_phi(const IntPoly& U, const IntPoly& S);

}  // namespace hk3
