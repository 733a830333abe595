// K3 classification of rank-22 hypergeometric lattices: table matching and special traces.
#pragma once

#include "hyperk3/clusters.hpp"

#include <optional>
#include <string>

namespace hk3 {

struct Rank22Case {
    int case_no = 0;
    int eps_index = 0;  // epsilon * (p - q), +16 or -16
};
std::optional<Rank22Case> classify_rank22(const TraceClusters& tc);

enum class Side { A, B };
enum class HodgeType { elliptic, parabolic, hyperbolic };
const char* to_string(Side s);
const char* to_string(HodgeType t);

struct K3Certificate {
    Side side = Side::A;
    std::string table;  // "ep-A", "hyp-A" or "hyp-B"
    int case_no = 0;
    HodgeType hodge_type = HodgeType::hyperbolic;
    AlgebraicReal special_trace;  // poly is the trace polynomial of chi0
    bool renormalized = false;    // hypergeometric index +16, form negated
    IntPoly chi0, chi1;
    int rho = 0;
    bool projective = false;
};

struct K3Result {
    std::optional<K3Certificate> cert;
    std::string reason;  // first violated condition when cert is empty
};

K3Result k3_certificate(const IntPoly& phi, const IntPoly& psi, Side side);

// Table-free determination: the unique simple root with local index +1 in K3
// normalization. Throws std::logic_error if there is not exactly one candidate
// or the endpoint conditions fail.
struct LocalIndexTrace {
    AlgebraicReal tau;
    HodgeType type = HodgeType::hyperbolic;
};
LocalIndexTrace special_trace_by_local_index(const TraceClusters& tc, Side side);

struct ChiSplit {
    IntPoly chi0, chi1;
    int rho = 0;
    bool projective = false;
};
// chi0 is the irreducible factor of chi whose trace polynomial vanishes at tau.
ChiSplit chi_factorization(const IntPoly& chi, const AlgebraicReal& tau);

}  // namespace hk3
