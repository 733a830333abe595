// Cyclotomic and Salem polynomials, trace polynomials, factor classification.
#pragma once

#include "hyperk3/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hk3 {

enum class CycloConvention { standard, squared };

long totient(long k);
IntPoly cyclotomic(long k, CycloConvention conv = CycloConvention::standard);
// CT_k with z^{deg} CT_k(z + 1/z) = C_k(z) in the squared convention.
IntPoly cyclotomic_trace(long k);
int ct_degree(long k);

// z^d P(z + 1/z) for P of degree d.
IntPoly trace_to_palindromic(const IntPoly& P);
// Inverse of the above; throws unless f is palindromic of even degree.
IntPoly palindromic_to_trace(const IntPoly& f);

IntPoly lehmer();        // L(z)
IntPoly lehmer_trace();  // LT(w)
IntPoly mt_poly();       // MT(w)
IntPoly nt_poly();       // NT(w)
// Degree-11 unramified Salem trace polynomials R_1..R_10.
IntPoly salem_trace(int i);
// LT times CT products of degree 6, the list L_1..L_8.
IntPoly lehmer_family(int i);
std::vector<long> lehmer_family_ks(int i);

struct TracePair {
    IntPoly Phi, Psi;
    int n = 0;  // rank
};
// Throws std::invalid_argument naming the violated identity.
TracePair trace_polynomial_pair(const IntPoly& phi, const IntPoly& psi);
// Inverse: (phi, psi) of rank n from trace polynomials.
std::pair<IntPoly, IntPoly> pair_from_traces(const IntPoly& Phi, const IntPoly& Psi, int n);

// Both sides of the resultant identity relating (phi, psi) and (Phi, Psi).
std::pair<Int, Int> resultant_relation(const IntPoly& phi, const IntPoly& psi);

enum class Variable { z, w };
bool is_unramified(const IntPoly& P, Variable v);

enum class FactorTag { cyclotomic, salem, salem_trace, other };
struct Factor {
    IntPoly poly;
    int mult = 1;
    FactorTag tag = FactorTag::other;
    long k = 0;  // cyclotomic index
};
using FactorList = std::vector<Factor>;
// Strips standard cyclotomic factors (trial division) and tags what remains.
FactorList classify_product(const IntPoly& f);
// Trace-side analogue: strips CT_k factors, tags Salem traces.
FactorList classify_trace_product(const IntPoly& P);
std::string factor_string(const FactorList& fl, char var = 'z');
// True iff P has one root > 2 and all others in (-2, 2), all simple and real.
bool is_salem_trace(const IntPoly& P);

struct CtEntry {
    long k;
    int deg;
    bool unramified;
};
// All CT_k of degree <= max_deg, ordered by degree then k.
std::vector<CtEntry> ct_catalog(int max_deg = 10);

}  // namespace hk3
