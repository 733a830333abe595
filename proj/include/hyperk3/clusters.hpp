// Interlacing trace clusters of (Phi, Psi) on [-2, 2] and the index formulas built on them.
#pragma once

#include "hyperk3/realroot.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk3 {

enum class RankParity { even, odd };

struct RealRoot {
    AlgebraicReal x;
    bool from_phi = false;  // root of Phi (an A-root) or of Psi (a B-root)
    bool on = false;        // lies in [-2, 2]
};

// Clusters are lists of indices into `roots`; sizes count multiplicity.
struct TraceClusters {
    RankParity parity = RankParity::even;
    IntPoly Phi, Psi;
    std::vector<RealRoot> roots;  // all real roots of Phi*Psi, strictly decreasing
    bool has_clusters = false;    // false only for even rank with B_on empty
    int s = 0;
    std::vector<std::vector<size_t>> a_clusters;  // A_1..A_{s+1} (even) or A_1..A_s (odd)
    std::vector<std::vector<size_t>> b_clusters;  // B_1..B_s
    int a_gt2 = 0, b_gt2 = 0;
    int a_on_total = 0, b_on_total = 0;
    int a_off_total = 0, b_off_total = 0;
    int mult_at_2 = 0, mult_at_neg2 = 0;  // of Phi*Psi

    // 1-based sizes, multiplicities included
    int size_A(int i) const;
    int size_B(int i) const;
    int a_in_size() const;
    int a_count() const { return static_cast<int>(a_clusters.size()); }
};

// Throws std::invalid_argument when Phi and Psi share a root.
TraceClusters compute_trace_clusters(const IntPoly& Phi, const IntPoly& Psi, RankParity parity);
// Same, starting from (phi, psi).
TraceClusters clusters_of_pair(const IntPoly& phi, const IntPoly& psi);

int epsilon_sign(const TraceClusters& tc);

struct IndexData {
    int epsilon = 1;
    int delta = 0;
    int S = 0;
    int p_minus_q = 0;
    std::vector<int> I_set;  // cluster numbers i in 2..s with |A_i| odd
    std::vector<int> sigma;  // sigma_i for i in I_set, same order
};

// p - q; a zero index when even rank and B_on is empty. Checks the numerical
// constraints on S, |I|, s and throws std::logic_error if one fails.
IndexData index(const TraceClusters& tc);

// Local index of the distinct root roots[k] in A_on or B_on, k not at +-2.
int local_index(const TraceClusters& tc, size_t k);
// Same for an arbitrary algebraic number; +-2 give idx(+-1). Throws if not a root on [-2, 2].
int local_index(const TraceClusters& tc, const AlgebraicReal& tau);
int idx_plus_one(const TraceClusters& tc);
int idx_minus_one(const TraceClusters& tc);
// Number of real roots of Phi*Psi above tau (at or above 2 when tau is 2).
int rho_at(const TraceClusters& tc, size_t k);

struct GroupIndices {
    int idx_a1 = 0, idx_as1 = 0, idx_ain = 0, idx_bon = 0;  // sums of local indices
    int idx_one = 0, idx_minus_one = 0;
    int a1_circ = 0, as1_circ = 0;  // |A_1 below 2|, |A_{s+1} above -2|
};
// Even rank with clusters only; throws std::invalid_argument otherwise.
GroupIndices cluster_group_indices(const TraceClusters& tc);

// Cluster sizes on the unit circle, in the cyclic order a_1, b_1, ..., a_t, b_t.
struct CircleClusters {
    std::vector<int> a, b;
    int a_off = 0, b_off = 0;
};
CircleClusters circle_clusters(const TraceClusters& tc);

// Lorentzian type 1..5, or none when |p - q| != n - 2 or no type matches.
std::optional<int> lorentz_classify(const TraceClusters& tc);
bool definite_pattern(const TraceClusters& tc);

std::vector<int> a_on_sizes(const TraceClusters& tc);
std::vector<int> a_in_sizes(const TraceClusters& tc);
std::vector<int> b_on_sizes(const TraceClusters& tc);
// "0^2 1^7 2^1": counts of clusters of each size, zero counts left out.
std::string signature_string(const std::vector<int>& sizes);

}  // namespace hk3
