// Real algebraic numbers by isolating intervals, Sturm sequences.
#pragma once

#include "hyperk3/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hk3 {

class Sturm {
public:
    explicit Sturm(const IntPoly& squarefree);
    // number of distinct roots in (a, b]
    int count(const Rat& a, const Rat& b) const;
    int variations(const Rat& x) const;

private:
    std::vector<IntPoly> seq_;
};

// A real root of a squarefree polynomial, located in the open interval (lo, hi).
// Endpoints are never roots of poly; poly changes sign across the interval.
struct AlgebraicReal {
    IntPoly poly;  // squarefree, primitive, positive leading coefficient
    Rat lo, hi;
    int mult = 1;  // multiplicity in the polynomial it was isolated from

    // Halve the interval until hi - lo < width.
    void refine(const Rat& width);
    void bisect();
    Rat mid() const { return (lo + hi) / 2; }
    double approx() const;
    // Rounded to `digits` decimals, e.g. "-1.88660".
    std::string decimal(int digits);
    bool is_rational() const { return poly.deg() == 1; }
};

// Sorted increasing; multiplicities from the squarefree decomposition.
std::vector<AlgebraicReal> isolate_real_roots(const IntPoly& f);
// Roots of a squarefree polynomial only.
std::vector<AlgebraicReal> isolate_squarefree(const IntPoly& sqf, int mult = 1);

// -1, 0, 1 ; exact
int compare(AlgebraicReal& a, AlgebraicReal& b);
int compare(AlgebraicReal& a, const Rat& x);
bool equal(AlgebraicReal& a, AlgebraicReal& b);
// sign of g at a
int sign_at(const IntPoly& g, AlgebraicReal& a);

// Refine a set of distinct numbers until their intervals are pairwise disjoint,
// then return the permutation sorting them increasingly.
std::vector<size_t> sort_distinct(std::vector<AlgebraicReal*>& xs);

std::string interval_string(const AlgebraicReal& a);

// "-1.88660" -> -188660/100000; the second member is the number of decimals.
std::pair<Rat, int> parse_decimal(const std::string& s);
// |a - v| < 10^-d for the printed decimal v with d decimals; decided exactly.
bool agrees_with_printed(AlgebraicReal& a, const std::string& printed);

}  // namespace hk3
