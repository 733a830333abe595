// Hypergeometric lattices: Taylor coefficients, Gram matrices, the matrices A, B, C.
#pragma once

#include "hyperk3/matrix.hpp"
#include "hyperk3/poly.hpp"

#include <utility>
#include <vector>

namespace hk3 {

// Coordinates are always taken in the A-basis r, Ar, ..., A^{n-1} r.
struct HgLattice {
    IntPoly phi, psi;
    int n = 0;
    IntMat gram_A;
    IntMat gram_B;  // Gram of r, Br, ..., B^{n-1} r
    IntMat mat_A, mat_B, mat_C;
    Int disc;  // det gram_A, sign kept
};

// xi_1..xi_count with psi/phi = 1 + sum xi_i z^{-i}.
std::vector<Int> taylor_coeffs(const IntPoly& phi, const IntPoly& psi, int count);

// Throws std::invalid_argument naming the first violated precondition.
HgLattice build_lattice(const IntPoly& phi, const IntPoly& psi);

// Columns B^j r expressed in the A-basis.
IntMat b_basis_change(const HgLattice& L);

bool is_unimodular(const IntPoly& phi, const IntPoly& psi);

// Exact LDL^T over Q; throws std::domain_error on a degenerate form.
std::pair<int, int> signature_oracle(const IntMat& gram);

}  // namespace hk3
