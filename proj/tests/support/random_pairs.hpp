// Random (phi, psi) pairs of small rank for property tests.
#pragma once

#include "hyperk3/catalog.hpp"

#include <random>

namespace hk3::testing {

inline IntPoly random_monic_poly(std::mt19937& rng, int deg, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<Int> c(deg + 1);
    for (int i = 0; i < deg; ++i) c[i] = d(rng);
    c[deg] = 1;
    return IntPoly(std::move(c));
}

// Trace polynomials with many real roots: products of linear factors (w - a) and a random tail.
inline IntPoly random_trace(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> pick(0, 3), root(-2, 2);
    IntPoly p = IntPoly::constant(1);
    int d = 0;
    while (d < deg) {
        if (pick(rng) == 0 || deg - d < 2) {
            p = p * IntPoly{-root(rng), 1};
            ++d;
        } else {
            p = p * random_monic_poly(rng, 2, 3);
            d += 2;
        }
    }
    return p;
}

// Coprime pair of rank n (2 <= n <= 12); retries until coprime.
inline std::pair<IntPoly, IntPoly> random_pair(std::mt19937& rng, int n) {
    int N = n / 2;
    while (true) {
        IntPoly Phi = random_trace(rng, n % 2 == 0 ? N - 1 : N);
        IntPoly Psi = random_trace(rng, N);
        auto [phi, psi] = pair_from_traces(Phi, Psi, n);
        if (resultant(phi, psi) != 0) return {phi, psi};
    }
}

}  // namespace hk3::testing
