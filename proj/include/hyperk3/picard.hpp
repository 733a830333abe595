// Picard lattice of a non-projective certificate, its root system, and the bringing-back step.
#pragma once

#include "hyperk3/hyplattice.hpp"
#include "hyperk3/k3class.hpp"

#include <string>
#include <vector>

namespace hk3 {

struct PicardLattice {
    int rho = 0;
    IntMat gram_pos;  // <u, v> = -(u, v) in the intersection form
    IntMat basis;     // 22 x rho, columns F^i s in the A-basis, s = chi0(F) r
    IntMat F;         // the generator on L, A-basis coordinates
    IntMat F_on_pic;  // rho x rho in the standard basis
    IntMat gram_k3;   // intersection form on L (hypergeometric form, negated if renormalized)
    IntPoly chi0, chi1;
};

// Throws std::invalid_argument for projective certificates.
PicardLattice picard_gram(const HgLattice& L, const K3Certificate& cert);

struct DynkinComponent {
    std::string label;          // "A2", "D10", "E6", ...
    std::vector<int> nodes;     // indices into simple_roots
};

struct RootSystemData {
    std::vector<IntVec> all_roots;
    std::vector<IntVec> positive_roots;  // ascending lexicographic order
    std::vector<int> simple_roots;       // indices into positive_roots, ascending
    std::vector<DynkinComponent> dynkin;
    IntVec weyl2;  // twice the Weyl vector: sum of positive roots
};

// All u with <u, u> = 2 by the completed-square tree search. Throws if gram is not positive definite.
RootSystemData enumerate_root_system(const IntMat& gram_pos);
void positive_simple_roots(RootSystemData& rs, const IntMat& gram_pos);
std::vector<DynkinComponent> dynkin_classify(const std::vector<IntVec>& simple, const IntMat& gram_pos);
// "E6+E6": components ordered E, D, A by decreasing rank.
std::string dynkin_string(const std::vector<DynkinComponent>& comps);

RootSystemData root_system(const IntMat& gram_pos);

enum class TieBreak { lowest_index, highest_index };

struct BringBackResult {
    std::vector<int> word;  // positive-root indices in application order
    IntMat pic_action;      // modified map on Pic, standard basis
    IntMat modified;        // full 22 x 22 matrix in the A-basis
    IntPoly chi_tilde, chi1_tilde;
    Int trace_tilde;
};

BringBackResult bring_back(const PicardLattice& pic, const RootSystemData& rs,
                           TieBreak tie = TieBreak::lowest_index);

// Checks chi_tilde = chi0 * chi1_tilde with chi1_tilde a cyclotomic product; throws otherwise.
void verify_modified_invariants(const PicardLattice& pic, const BringBackResult& bb);

// perm[i] = j when the modified map sends simple root i to simple root j.
std::vector<int> dynkin_action(const BringBackResult& bb, const RootSystemData& rs);
std::vector<std::vector<int>> cycles(const std::vector<int>& perm);

}  // namespace hk3
