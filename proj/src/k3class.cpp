#include "hyperk3/k3class.hpp"

#include "hyperk3/catalog.hpp"
#include "hyperk3/hyplattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hk3 {

namespace {

enum class St { middle_tc, inner_ap, min_of, max_of, element_of };

struct Cond {
    char X;  // 'A' or 'B'
    int i;
    int size;
};

struct Row {
    int case_no;
    int s;
    const char* main_sig;  // [A_on] for side-A tables, [A_in] otherwise
    const char* b_sig;
    int extra;  // ep-A: A_1 non-null (1) or null (0); hyp-A: |A_>2|; hyp-B: |B_>2|
    int b_off;  // -1 where the table has no such column
    std::vector<Cond> conds;
    bool adjacent;
    St st;
    char st_X;
    int st_i;
};

const std::vector<Row>& ep_a_rows() {
    static const std::vector<Row> rows = {
        {1, 8, "0^1 1^7 3^1", "1^8", 1, 3, {}, false, St::middle_tc, 'A', 0},
        {2, 8, "0^1 1^7 3^1", "1^7 3^1", 1, 1, {}, false, St::middle_tc, 'A', 0},
        {3, 9, "0^2 1^7 3^1", "1^8 2^1", 0, 1, {{'B', 1, 2}}, false, St::middle_tc, 'A', 0},
        {4, 8, "1^8 2^1", "1^8", 1, 3, {{'A', 9, 2}}, false, St::min_of, 'A', 9},
        {5, 8, "1^8 2^1", "1^7 3^1", 1, 1, {{'A', 9, 2}}, false, St::min_of, 'A', 9},
        {6, 9, "0^1 1^8 2^1", "1^8 2^1", 1, 1, {}, true, St::inner_ap, 'A', 0},
        {7, 9, "0^1 1^8 2^1", "1^8 2^1", 0, 1, {{'A', 10, 2}, {'B', 1, 2}}, false, St::min_of, 'A', 10},
        {8, 10, "0^2 1^8 2^1", "1^10", 0, 1, {{'A', 2, 2}}, false, St::max_of, 'A', 2},
        {9, 9, "1^10", "1^8 2^1", 1, 1, {{'B', 9, 2}}, false, St::element_of, 'A', 10},
    };
    return rows;
}

const std::vector<Row>& hyp_a_rows() {
    static const std::vector<Row> rows = {
        {1, 8, "0^2 1^6 3^1", "1^8", 1, 3, {}, false, St::middle_tc, 'A', 0},
        {2, 8, "0^2 1^6 3^1", "1^7 3^1", 1, 1, {}, false, St::middle_tc, 'A', 0},
        {3, 8, "0^1 1^7 2^1", "1^8", 1, 3, {{'A', 1, 2}}, false, St::max_of, 'A', 1},
        {4, 8, "0^1 1^7 2^1", "1^8", 1, 3, {{'A', 9, 2}}, false, St::min_of, 'A', 9},
        {5, 8, "0^1 1^7 2^1", "1^7 3^1", 1, 1, {{'A', 1, 2}}, false, St::max_of, 'A', 1},
        {6, 8, "0^1 1^7 2^1", "1^7 3^1", 1, 1, {{'A', 9, 2}}, false, St::min_of, 'A', 9},
        {7, 9, "0^2 1^7 2^1", "1^8 2^1", 1, 1, {}, true, St::inner_ap, 'A', 0},
        {8, 9, "0^1 1^9", "1^8 2^1", 1, 1, {{'A', 1, 1}, {'B', 1, 2}}, false, St::element_of, 'A', 1},
        {9, 9, "0^1 1^9", "1^8 2^1", 1, 1, {{'A', 10, 1}, {'B', 9, 2}}, false, St::element_of, 'A', 10},
    };
    return rows;
}

const std::vector<Row>& hyp_b_rows() {
    static const std::vector<Row> rows = {
        {1, 8, "1^7", "1^7 3^1", 1, -1, {}, false, St::middle_tc, 'B', 0},
        {2, 8, "1^6 3^1", "1^7 3^1", 1, -1, {}, false, St::middle_tc, 'B', 0},
        {3, 9, "1^7 2^1", "1^8 2^1", 1, -1, {}, true, St::inner_ap, 'B', 0},
        {4, 9, "1^8", "1^8 2^1", 1, -1, {{'B', 1, 2}}, false, St::max_of, 'B', 1},
        {5, 9, "1^8", "1^8 2^1", 1, -1, {{'B', 9, 2}}, false, St::min_of, 'B', 9},
        {6, 9, "1^7 3^1", "1^8 2^1", 1, -1, {{'B', 1, 2}}, false, St::max_of, 'B', 1},
        {7, 9, "1^7 3^1", "1^8 2^1", 1, -1, {{'B', 9, 2}}, false, St::min_of, 'B', 9},
        {8, 10, "1^8 2^1", "1^10", 1, -1, {{'A', 2, 2}}, false, St::element_of, 'B', 1},
        {9, 10, "1^8 2^1", "1^10", 1, -1, {{'A', 10, 2}}, false, St::element_of, 'B', 10},
    };
    return rows;
}

int cluster_size(const TraceClusters& tc, char X, int i) {
    if (X == 'A') return i <= tc.a_count() ? tc.size_A(i) : -1;
    return i <= tc.s ? tc.size_B(i) : -1;
}

// Unique double A-cluster among A_lo..A_hi and unique double B-cluster, adjacent.
std::optional<std::pair<int, int>> adjacent_doubles(const TraceClusters& tc, int a_lo, int a_hi) {
    int ia = 0, ib = 0, na = 0, nb = 0;
    for (int i = a_lo; i <= a_hi; ++i)
        if (tc.size_A(i) == 2) ia = i, ++na;
    for (int j = 1; j <= tc.s; ++j)
        if (tc.size_B(j) == 2) ib = j, ++nb;
    if (na != 1 || nb != 1) return std::nullopt;
    if (ib != ia - 1 && ib != ia) return std::nullopt;
    return std::make_pair(ia, ib);
}

bool conds_hold(const TraceClusters& tc, const std::vector<Cond>& conds) {
    for (const auto& c : conds)
        if (cluster_size(tc, c.X, c.i) != c.size) return false;
    return true;
}

// nullopt when the rule is undefined: an adjacent pair with a repeated root
// has fewer than four distinct elements, so it has no inner elements.
std::optional<AlgebraicReal> locate(const TraceClusters& tc, const Row& row) {
    auto cluster = [&](char X, int i) -> const std::vector<size_t>& {
        return X == 'A' ? tc.a_clusters.at(i - 1) : tc.b_clusters.at(i - 1);
    };
    switch (row.st) {
        case St::middle_tc: {
            const auto& list = row.st_X == 'A' ? tc.a_clusters : tc.b_clusters;
            for (const auto& cl : list)
                if (cl.size() == 3) return tc.roots[cl[1]].x;
            break;
        }
        case St::inner_ap: {
            auto ap = row.st_X == 'A' ? adjacent_doubles(tc, 1, tc.a_count()) : adjacent_doubles(tc, 2, tc.s);
            if (!ap) break;
            std::vector<size_t> four = cluster(row.st_X == 'A' ? 'A' : 'B', row.st_X == 'A' ? ap->first : ap->second);
            const auto& other = row.st_X == 'A' ? cluster('B', ap->second) : cluster('A', ap->first);
            four.insert(four.end(), other.begin(), other.end());
            std::sort(four.begin(), four.end());  // descending by value
            if (four.size() != 4) return std::nullopt;
            for (size_t pos : {1, 2})
                if (tc.roots[four[pos]].from_phi == (row.st_X == 'A')) return tc.roots[four[pos]].x;
            break;
        }
        case St::min_of: return tc.roots[cluster(row.st_X, row.st_i).back()].x;
        case St::max_of: return tc.roots[cluster(row.st_X, row.st_i).front()].x;
        case St::element_of: return tc.roots[cluster(row.st_X, row.st_i).front()].x;
    }
    throw std::logic_error("special trace rule does not apply to the matched configuration");
}

bool all_simple(const IntPoly& f) { return f.deg() < 1 || squarefree_part(f).deg() == f.deg(); }

}  // namespace

const char* to_string(Side s) { return s == Side::A ? "A" : "B"; }

const char* to_string(HodgeType t) {
    switch (t) {
        case HodgeType::elliptic: return "elliptic";
        case HodgeType::parabolic: return "parabolic";
        default: return "hyperbolic";
    }
}

std::optional<Rank22Case> classify_rank22(const TraceClusters& tc) {
    if (tc.parity != RankParity::even || tc.Psi.deg() != 11 || !tc.has_clusters) return std::nullopt;
    std::string ain = signature_string(a_in_sizes(tc)), bon = signature_string(b_on_sizes(tc));
    int s = tc.s;
    std::optional<Rank22Case> out;
    auto is = [&](int ss, const char* a, const char* b) { return s == ss && ain == a && bon == b; };
    if (is(8, "1^7", "1^8")) out = Rank22Case{1, 16};
    else if (is(8, "1^6 3^1", "1^8")) out = Rank22Case{2, 16};
    else if (is(8, "1^7", "1^7 3^1")) out = Rank22Case{3, 16};
    else if (is(8, "1^6 3^1", "1^7 3^1")) out = Rank22Case{4, 16};
    else if (is(9, "1^7 2^1", "1^8 2^1")) {
        if (adjacent_doubles(tc, 2, s)) out = Rank22Case{5, 16};
    } else if (is(9, "1^8", "1^8 2^1") || is(9, "1^7 3^1", "1^8 2^1")) {
        int c = ain == "1^8" ? 6 : 7;
        if (tc.size_B(9) == 2) out = Rank22Case{c, 16};
        else if (tc.size_B(1) == 2) out = Rank22Case{c, -16};
    } else if (is(10, "1^8 2^1", "1^10")) {
        if (tc.size_A(10) == 2) out = Rank22Case{8, 16};
        else if (tc.size_A(2) == 2) out = Rank22Case{8, -16};
    }
    if (out) {
        auto d = index(tc);
        if (d.epsilon * d.p_minus_q != out->eps_index)
            throw std::logic_error("rank-22 table disagrees with the index formula");
    }
    return out;
}

LocalIndexTrace special_trace_by_local_index(const TraceClusters& tc, Side side) {
    auto d = index(tc);
    if (std::abs(d.p_minus_q) != 16) throw std::logic_error("local-index path: index is not +-16");
    int k3 = d.p_minus_q == 16 ? -1 : 1;
    LocalIndexTrace out;
    std::vector<size_t> cand;
    if (side == Side::A) {
        if (tc.mult_at_neg2 != 0 || k3 * idx_minus_one(tc) != -1)
            throw std::logic_error("local-index path: endpoint conditions at -2 fail");
        int m2 = tc.mult_at_2, i1 = k3 * idx_plus_one(tc);
        if (m2 == 0 && i1 == 1) out.type = HodgeType::elliptic;
        else if (m2 == 1 && i1 == -1) out.type = HodgeType::parabolic;
        else if (m2 == 0 && i1 == -1) out.type = HodgeType::hyperbolic;
        else throw std::logic_error("local-index path: endpoint conditions at 2 fail");
    } else {
        int sum = 0;
        for (size_t k = 0; k < tc.roots.size(); ++k)
            if (tc.roots[k].on && !tc.roots[k].from_phi) sum += k3 * local_index(tc, k);
        if (sum != -8) throw std::logic_error("local-index path: Idx(B_on) != -8");
    }
    for (size_t k = 0; k < tc.roots.size(); ++k) {
        const auto& r = tc.roots[k];
        if (!r.on || r.from_phi != (side == Side::A) || r.x.mult != 1) continue;
        AlgebraicReal x = r.x;
        if (compare(x, Rat(2)) == 0 || compare(x, Rat(-2)) == 0) continue;
        if (k3 * local_index(tc, k) == 1) cand.push_back(k);
    }
    if (cand.size() != 1) throw std::logic_error("local-index path: " + std::to_string(cand.size()) + " candidates");
    out.tau = tc.roots[cand[0]].x;
    return out;
}

ChiSplit chi_factorization(const IntPoly& chi, const AlgebraicReal& tau) {
    ChiSplit out;
    AlgebraicReal t = tau;
    for (const auto& f : classify_product(chi)) {
        IntPoly trace_poly;
        if (f.tag == FactorTag::cyclotomic) {
            if (f.k <= 2) continue;
            trace_poly = cyclotomic_trace(f.k);
        } else if (palindrome_class(f.poly) == Palindromy::palindromic && f.poly.deg() % 2 == 0) {
            trace_poly = palindromic_to_trace(f.poly);
        } else {
            continue;
        }
        if (sign_at(trace_poly, t) != 0) continue;
        if (!out.chi0.zero()) throw std::invalid_argument("chi_factorization: tau is a root of two factors");
        out.chi0 = f.poly;
        out.projective = f.tag == FactorTag::cyclotomic;
        if (f.tag == FactorTag::other) throw std::invalid_argument("chi_factorization: factor is neither cyclotomic nor Salem");
    }
    if (out.chi0.zero()) throw std::invalid_argument("chi_factorization: tau is not a trace of chi");
    out.chi1 = exact_div(chi, out.chi0);
    out.rho = chi.deg() - out.chi0.deg();
    return out;
}

K3Result k3_certificate(const IntPoly& phi, const IntPoly& psi, Side side) {
    K3Result res;
    TracePair tp;
    try {
        tp = trace_polynomial_pair(phi, psi);
    } catch (const std::invalid_argument& e) {
        res.reason = e.what();
        return res;
    }
    if (tp.n != 22) return {std::nullopt, "rank is " + std::to_string(tp.n) + ", not 22"};
    if (resultant(phi, psi) == 0) return {std::nullopt, "phi and psi have a common root"};
    if (!is_unimodular(phi, psi)) return {std::nullopt, "not unimodular: |Res(phi, psi)| != 1"};
    TraceClusters tc = compute_trace_clusters(tp.Phi, tp.Psi, RankParity::even);
    IndexData d = index(tc);
    if (std::abs(d.p_minus_q) != 16) return {std::nullopt, "index is " + std::to_string(d.p_minus_q) + ", not +-16"};

    bool phi2 = eval(tp.Phi, Int(2)) == 0;
    if (side == Side::A) {
        if (eval(tp.Phi, Int(-2)) == 0) return {std::nullopt, "Phi(-2) = 0"};
        if (!all_simple(tp.Phi) || !all_simple(tp.Psi)) return {std::nullopt, "Phi or Psi has a multiple root"};
    } else {
        if (!all_simple(tp.Psi)) return {std::nullopt, "Psi has a multiple root"};
        if (eval(tp.Psi, Int(2)) == 0 || eval(tp.Psi, Int(-2)) == 0) return {std::nullopt, "Psi(+-2) = 0"};
    }

    std::string bon = signature_string(b_on_sizes(tc));
    std::string aon = signature_string(a_on_sizes(tc)), ain = signature_string(a_in_sizes(tc));
    const Row* hit = nullptr;
    std::string table;
    HodgeType type = HodgeType::hyperbolic;
    auto row_matches = [&](const Row& r, const std::string& main) {
        if (r.s != tc.s || main != r.main_sig || bon != r.b_sig) return false;
        if (r.b_off >= 0 && tc.b_off_total != r.b_off) return false;
        if (!conds_hold(tc, r.conds)) return false;
        if (r.adjacent) {
            auto ap = side == Side::A ? adjacent_doubles(tc, 1, tc.a_count()) : adjacent_doubles(tc, 2, tc.s);
            if (!ap) return false;
        }
        return true;
    };
    if (side == Side::A) {
        for (const auto& r : ep_a_rows())
            if (row_matches(r, aon) && (tc.size_A(1) > 0) == (r.extra == 1) && tc.a_gt2 == 0) {
                hit = &r;
                table = "ep-A";
                type = phi2 ? HodgeType::parabolic : HodgeType::elliptic;
                break;
            }
        if (!hit && !phi2)
            for (const auto& r : hyp_a_rows())
                if (row_matches(r, aon) && tc.a_gt2 == r.extra) {
                    hit = &r;
                    table = "hyp-A";
                    break;
                }
    } else {
        for (const auto& r : hyp_b_rows())
            if (row_matches(r, ain) && tc.b_gt2 == r.extra) {
                hit = &r;
                table = "hyp-B";
                break;
            }
    }
    if (!hit)
        return {std::nullopt, "no table row matches: s=" + std::to_string(tc.s) + " [A_on]=" + aon +
                                  " [A_in]=" + ain + " [B_on]=" + bon};

    std::optional<AlgebraicReal> located = locate(tc, *hit);
    // second, independent determination
    LocalIndexTrace li = special_trace_by_local_index(tc, side);
    AlgebraicReal tau = located ? *located : li.tau;
    if (!equal(tau, li.tau) || li.type != type)
        throw std::logic_error("table and local-index determinations of the special trace disagree");

    K3Certificate c;
    c.side = side;
    c.table = table;
    c.case_no = hit->case_no;
    c.hodge_type = type;
    c.renormalized = d.p_minus_q == 16;
    ChiSplit cs = chi_factorization(side == Side::A ? phi : psi, tau);
    c.chi0 = cs.chi0;
    c.chi1 = cs.chi1;
    c.rho = cs.rho;
    c.projective = cs.projective;
    IntPoly minpoly = primitive(palindromic_to_trace(cs.chi0));
    for (auto& r : isolate_squarefree(minpoly))
        if (equal(r, tau)) c.special_trace = r;
    if (c.special_trace.poly.zero()) throw std::logic_error("special trace not found among roots of its minimal polynomial");
    res.cert = c;
    return res;
}

}  // namespace hk3
