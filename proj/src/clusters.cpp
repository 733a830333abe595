#include "hyperk3/clusters.hpp"

#include "hyperk3/catalog.hpp"

#include <map>
#include <stdexcept>

namespace hk3 {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

int rank_of(const TraceClusters& tc) {
    int N = tc.Psi.deg();
    return tc.parity == RankParity::even ? 2 * N : 2 * N + 1;
}

int total(const TraceClusters& tc, const std::vector<size_t>& cl) {
    int m = 0;
    for (size_t k : cl) m += tc.roots[k].x.mult;
    return m;
}

std::map<int, int> tally(const std::vector<int>& sizes) {
    std::map<int, int> m;
    for (int x : sizes) ++m[x];
    return m;
}

// multiset 1^{ones} plus one cluster of size `big` (big = 0 for none)
bool is_pattern(const std::vector<int>& sizes, int ones, int big) {
    std::map<int, int> want;
    if (ones > 0) want[1] = ones;
    if (big > 0) ++want[big];
    return tally(sizes) == want;
}

}  // namespace

int TraceClusters::size_A(int i) const { return total(*this, a_clusters.at(i - 1)); }
int TraceClusters::size_B(int i) const { return total(*this, b_clusters.at(i - 1)); }

int TraceClusters::a_in_size() const {
    int m = 0;
    for (int i = 2; i <= s; ++i) m += size_A(i);
    return m;
}

TraceClusters compute_trace_clusters(const IntPoly& Phi, const IntPoly& Psi, RankParity parity) {
    if (resultant(Phi, Psi) == 0) throw std::invalid_argument("Phi and Psi share a root");
    TraceClusters tc;
    tc.parity = parity;
    tc.Phi = Phi;
    tc.Psi = Psi;
    std::vector<RealRoot> all;
    for (int side = 0; side < 2; ++side) {
        const IntPoly& f = side == 0 ? Phi : Psi;
        if (f.deg() < 1) continue;
        for (auto& r : isolate_real_roots(f)) all.push_back({r, side == 0, false});
    }
    std::vector<AlgebraicReal*> ptrs;
    for (auto& r : all) ptrs.push_back(&r.x);
    auto perm = sort_distinct(ptrs);
    for (auto it = perm.rbegin(); it != perm.rend(); ++it) tc.roots.push_back(all[*it]);

    for (auto& r : tc.roots) {
        int c2 = compare(r.x, Rat(2)), cm2 = compare(r.x, Rat(-2));
        r.on = c2 <= 0 && cm2 >= 0;
        if (c2 == 0) tc.mult_at_2 += r.x.mult;
        if (cm2 == 0) tc.mult_at_neg2 += r.x.mult;
        int& on_total = r.from_phi ? tc.a_on_total : tc.b_on_total;
        if (r.on) on_total += r.x.mult;
        else if (c2 > 0) (r.from_phi ? tc.a_gt2 : tc.b_gt2) += r.x.mult;
    }
    tc.a_off_total = std::max(Phi.deg(), 0) - tc.a_on_total;
    tc.b_off_total = std::max(Psi.deg(), 0) - tc.b_on_total;

    if (parity == RankParity::even && tc.b_on_total == 0) return tc;
    tc.has_clusters = true;

    // slots alternate A, B, A, ... from +2 downwards; a run of the wrong type leaves an empty slot
    std::vector<std::vector<size_t>> slots;
    auto slot_is_a = [&](size_t i) { return i % 2 == 0; };
    for (size_t k = 0; k < tc.roots.size(); ++k) {
        const auto& r = tc.roots[k];
        if (!r.on) continue;
        bool continues = !slots.empty() && slot_is_a(slots.size() - 1) == r.from_phi;
        if (!continues) {
            if (slot_is_a(slots.size()) != r.from_phi) slots.emplace_back();
            slots.emplace_back();
        }
        slots.back().push_back(k);
    }
    if (slots.empty()) slots.emplace_back();
    bool last_a = slot_is_a(slots.size() - 1);
    if (parity == RankParity::even && !last_a) slots.emplace_back();
    if (parity == RankParity::odd && last_a) slots.emplace_back();
    for (size_t i = 0; i < slots.size(); ++i) (slot_is_a(i) ? tc.a_clusters : tc.b_clusters).push_back(slots[i]);
    tc.s = static_cast<int>(tc.b_clusters.size());
    return tc;
}

TraceClusters clusters_of_pair(const IntPoly& phi, const IntPoly& psi) {
    TracePair tp = trace_polynomial_pair(phi, psi);
    return compute_trace_clusters(tp.Phi, tp.Psi, tp.n % 2 == 0 ? RankParity::even : RankParity::odd);
}

int epsilon_sign(const TraceClusters& tc) {
    if (!tc.has_clusters) throw std::domain_error("B_on is empty in even rank: the index is zero");
    return parity_sign(tc.size_A(1) + tc.a_gt2 + tc.b_gt2);
}

IndexData index(const TraceClusters& tc) {
    IndexData d;
    if (!tc.has_clusters) return d;
    d.epsilon = epsilon_sign(tc);
    int a_in = tc.a_in_size();
    d.delta = tc.parity == RankParity::even ? parity_sign(a_in + tc.b_on_total + 1) : 0;
    int sigma = tc.size_B(1);
    for (int i = 2; i <= tc.s; ++i) {
        if (tc.size_A(i) % 2 == 1) {
            d.I_set.push_back(i);
            d.sigma.push_back(sigma);
            d.S += parity_sign(sigma);
        }
        sigma += tc.size_A(i) + tc.size_B(i);
    }
    d.p_minus_q = d.epsilon * (1 + d.delta - 2 * d.S);

    int I = static_cast<int>(d.I_set.size()), s = tc.s;
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("index constraint violated: ") + what);
    };
    require(((d.S - I) % 2 == 0) && ((I - a_in) % 2 == 0), "S = |I| = |A_in| mod 2");
    require(std::abs(d.S) <= I && I <= s - 1, "|S| <= |I| <= s-1");
    require(2 * (s - 1) <= I + a_in && I + a_in <= 2 * a_in, "s-1 <= (|I|+|A_in|)/2 <= |A_in|");
    // an odd-rank end cluster B_s may be null
    require(tc.parity == RankParity::even ? s <= tc.b_on_total : s - 1 <= tc.b_on_total, "s <= |B_on|");
    require(std::abs(d.p_minus_q) % 2 == rank_of(tc) % 2, "p-q = n mod 2");
    return d;
}

int rho_at(const TraceClusters& tc, size_t k) {
    int r = 0;
    for (size_t j = 0; j < k; ++j) r += tc.roots[j].x.mult;
    AlgebraicReal x = tc.roots[k].x;
    if (compare(x, Rat(2)) == 0) r += x.mult;
    return r;
}

int local_index(const TraceClusters& tc, size_t k) {
    const auto& r = tc.roots.at(k);
    if (!r.on) throw std::invalid_argument("local_index: root is off [-2, 2]");
    AlgebraicReal x = r.x;
    if (compare(x, Rat(2)) == 0 || compare(x, Rat(-2)) == 0)
        throw std::invalid_argument("local_index: use idx(+-1) at +-2");
    if (r.x.mult % 2 == 0) return 0;
    int rho = rho_at(tc, k);
    return r.from_phi ? parity_sign(rho + 1) : parity_sign(rho);
}

int idx_plus_one(const TraceClusters& tc) {
    int rho = 0;
    for (const auto& r : tc.roots) {
        AlgebraicReal x = r.x;
        if (compare(x, Rat(2)) >= 0) rho += x.mult;
    }
    return parity_sign(rho);
}

int idx_minus_one(const TraceClusters& tc) {
    int rho = 0;
    for (const auto& r : tc.roots) {
        AlgebraicReal x = r.x;
        if (compare(x, Rat(-2)) > 0) rho += x.mult;
    }
    return parity_sign(rho + rank_of(tc) + 1);
}

int local_index(const TraceClusters& tc, const AlgebraicReal& tau) {
    AlgebraicReal t = tau;
    if (compare(t, Rat(2)) == 0) return idx_plus_one(tc);
    if (compare(t, Rat(-2)) == 0) return idx_minus_one(tc);
    for (size_t k = 0; k < tc.roots.size(); ++k) {
        AlgebraicReal x = tc.roots[k].x;
        if (tc.roots[k].on && equal(x, t)) return local_index(tc, k);
    }
    throw std::invalid_argument("local_index: tau is not a root of Phi*Psi on [-2, 2]");
}

GroupIndices cluster_group_indices(const TraceClusters& tc) {
    if (tc.parity != RankParity::even || !tc.has_clusters)
        throw std::invalid_argument("cluster_group_indices: even rank with B_on nonempty required");
    GroupIndices g;
    g.idx_one = idx_plus_one(tc);
    g.idx_minus_one = idx_minus_one(tc);
    auto sum_over = [&](const std::vector<size_t>& cl, int* circ) {
        int sum = 0;
        for (size_t k : cl) {
            AlgebraicReal x = tc.roots[k].x;
            if (compare(x, Rat(2)) == 0 || compare(x, Rat(-2)) == 0) continue;
            if (circ) *circ += x.mult;
            sum += local_index(tc, k);
        }
        return sum;
    };
    g.idx_a1 = sum_over(tc.a_clusters.front(), &g.a1_circ);
    g.idx_as1 = sum_over(tc.a_clusters.back(), &g.as1_circ);
    for (int i = 2; i <= tc.s; ++i) g.idx_ain += sum_over(tc.a_clusters[i - 1], nullptr);
    for (const auto& cl : tc.b_clusters) g.idx_bon += sum_over(cl, nullptr);
    return g;
}

CircleClusters circle_clusters(const TraceClusters& tc) {
    if (!tc.has_clusters) throw std::invalid_argument("circle_clusters: no clusters");
    CircleClusters c;
    int s = tc.s;
    if (tc.parity == RankParity::even) {
        c.a.push_back(2 * tc.size_A(1) + 1);
        for (int i = 2; i <= s; ++i) c.a.push_back(tc.size_A(i));
        c.a.push_back(2 * tc.size_A(s + 1) + 1);
        for (int i = s; i >= 2; --i) c.a.push_back(tc.size_A(i));
        for (int i = 1; i <= s; ++i) c.b.push_back(tc.size_B(i));
        for (int i = s; i >= 1; --i) c.b.push_back(tc.size_B(i));
    } else {
        c.a.push_back(2 * tc.size_A(1) + 1);
        for (int i = 2; i <= s; ++i) c.a.push_back(tc.size_A(i));
        for (int i = s; i >= 2; --i) c.a.push_back(tc.size_A(i));
        for (int i = 1; i < s; ++i) c.b.push_back(tc.size_B(i));
        c.b.push_back(2 * tc.size_B(s) + 1);
        for (int i = s - 1; i >= 1; --i) c.b.push_back(tc.size_B(i));
    }
    int n = rank_of(tc), sa = 0, sb = 0;
    for (int x : c.a) sa += x;
    for (int x : c.b) sb += x;
    c.a_off = n - sa;
    c.b_off = n - sb;
    return c;
}

std::optional<int> lorentz_classify(const TraceClusters& tc) {
    if (!tc.has_clusters) return std::nullopt;
    int n = rank_of(tc);
    if (n < 3 || std::abs(index(tc).p_minus_q) != n - 2) return std::nullopt;
    CircleClusters c = circle_clusters(tc);
    int t = static_cast<int>(c.a.size());
    auto off = [&](int a, int b) { return c.a_off == a && c.b_off == b; };
    if (off(0, 0) && is_pattern(c.a, n - 2, 2) && is_pattern(c.b, n - 2, 2)) {
        int ka = 0, kb = 0;
        for (int k = 0; k < t; ++k) {
            if (c.a[k] == 2) ka = k;
            if (c.b[k] == 2) kb = k;
        }
        // a_k sits between b_{k-1} and b_k
        if (kb == ka || kb == (ka + t - 1) % t) return 1;
        return std::nullopt;
    }
    if (off(0, 0) && is_pattern(c.a, n - 3, 3) && is_pattern(c.b, n - 3, 3)) return 2;
    if (off(0, 2) && is_pattern(c.a, n - 3, 3) && is_pattern(c.b, n - 2, 0)) return 3;
    if (off(2, 0) && is_pattern(c.a, n - 2, 0) && is_pattern(c.b, n - 3, 3)) return 4;
    if (off(2, 2) && is_pattern(c.a, n - 2, 0) && is_pattern(c.b, n - 2, 0)) return 5;
    return std::nullopt;
}

bool definite_pattern(const TraceClusters& tc) {
    if (!tc.has_clusters) return false;
    CircleClusters c = circle_clusters(tc);
    int n = rank_of(tc);
    return c.a_off == 0 && c.b_off == 0 && is_pattern(c.a, n, 0) && is_pattern(c.b, n, 0);
}

std::vector<int> a_on_sizes(const TraceClusters& tc) {
    std::vector<int> v;
    for (int i = 1; i <= tc.a_count(); ++i) v.push_back(tc.size_A(i));
    return v;
}

std::vector<int> a_in_sizes(const TraceClusters& tc) {
    std::vector<int> v;
    for (int i = 2; i <= tc.s; ++i) v.push_back(tc.size_A(i));
    return v;
}

std::vector<int> b_on_sizes(const TraceClusters& tc) {
    std::vector<int> v;
    for (int i = 1; i <= tc.s; ++i) v.push_back(tc.size_B(i));
    return v;
}

std::string signature_string(const std::vector<int>& sizes) {
    std::string out;
    for (auto [size, count] : tally(sizes)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(size) + "^" + std::to_string(count);
    }
    return out;
}

}  // namespace hk3
