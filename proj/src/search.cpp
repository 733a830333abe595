#include "hyperk3/search.hpp"

#include "hyperk3/hyplattice.hpp"
#include "hyperk3/picard.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hk3 {

unsigned worker_count() {
    if (const char* env = std::getenv("HYPERK3_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

std::vector<CtEntry> list_ct_catalog() { return ct_catalog(10); }

IntPoly ct_product(const std::vector<long>& ks) {
    IntPoly p = IntPoly::constant(1);
    for (long k : ks) p = p * cyclotomic_trace(k);
    return p;
}

std::string ks_string(const std::vector<long>& ks) {
    std::string s;
    for (long k : ks) s += (s.empty() ? "" : ",") + std::to_string(k);
    return s;
}

std::vector<std::vector<long>> enumerate_ct_products(int target, MultiplicityRule rule, const std::vector<long>& allowed) {
    std::vector<CtEntry> cat;
    for (const auto& e : ct_catalog(10))
        if (allowed.empty() || std::count(allowed.begin(), allowed.end(), e.k)) cat.push_back(e);
    std::sort(cat.begin(), cat.end(), [](const CtEntry& a, const CtEntry& b) { return a.k < b.k; });
    const std::vector<long> integer_roots{1, 2, 3, 4, 6};
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    // choose a multiplicity for each catalog entry in turn; at most one entry repeated
    std::function<void(size_t, int, bool)> rec = [&](size_t i, int left, bool repeated) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (i == cat.size()) return;
        rec(i + 1, left, repeated);
        int max_mult = 1;
        if (rule == MultiplicityRule::one_multiple_le3 && !repeated &&
            std::count(integer_roots.begin(), integer_roots.end(), cat[i].k))
            max_mult = 3;
        for (int m = 1; m <= max_mult && m * cat[i].deg <= left; ++m) {
            cur.push_back(cat[i].k);
            rec(i + 1, left - m * cat[i].deg, repeated || m > 1);
        }
        for (int m = 1; m <= max_mult && m * cat[i].deg <= left; ++m) cur.pop_back();
    };
    rec(0, target, false);
    for (auto& v : out) std::sort(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

int position_from_top(const AlgebraicReal& tau_in) {
    AlgebraicReal tau = tau_in;
    int above = 0;
    for (auto& r : isolate_squarefree(tau.poly))
        if (compare(r, Rat(2)) < 0 && compare(r, tau) > 0) ++above;
    return above + 1;
}

namespace {

int label_order(const std::string& s) {
    // R1 < R2 < ... < R10, then L1 .. L8
    int base = s[0] == 'R' ? 0 : 100;
    return base + std::stoi(s.substr(1));
}

// Indices k whose CT_k has resultant +-1 with Psi.
std::vector<long> unimodular_indices(const IntPoly& Psi) {
    std::vector<long> out;
    for (const auto& e : ct_catalog(10)) {
        Int r = resultant(cyclotomic_trace(e.k), Psi);
        if (abs(r) == 1) out.push_back(e.k);
    }
    return out;
}

template <class Fn>
std::vector<SearchEntry> parallel_map(const std::vector<std::vector<long>>& jobs, Fn fn) {
    std::vector<std::optional<SearchEntry>> results(jobs.size());
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&] {
        while (true) {
            size_t i = next++;
            if (i >= jobs.size()) return;
            try {
                results[i] = fn(jobs[i]);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    unsigned n = std::min<unsigned>(worker_count(), std::max<size_t>(1, jobs.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    std::vector<SearchEntry> out;
    for (auto& r : results)
        if (r) out.push_back(std::move(*r));
    return out;
}

QLabel q_for_dynkin(const std::string& d) {
    if (d == "E6+E6") return QLabel::fixed_point;
    if (d == "E8+A2+A2") return QLabel::e8a2a2;
    if (d == "D10") return QLabel::d10;
    if (d == "A2") return QLabel::a2;
    throw std::domain_error("no q(w) catalogued for Dynkin type " + d);
}

std::optional<SearchEntry> lehmer_entry(const std::string& label, const std::vector<long>& ks, const IntPoly& Phi,
                                        const IntPoly& Psi, Side side) {
    auto [phi, psi] = pair_from_traces(Phi, Psi, 22);
    auto r = k3_certificate(phi, psi, side);
    if (!r.cert || r.cert->chi0 != lehmer()) return std::nullopt;
    SearchEntry e{label, ks, *r.cert, {}, {}, {}, {}, Verdict::indeterminate, QLabel::fixed_point};
    e.st_label = "x" + std::to_string(position_from_top(e.cert.special_trace));
    HgLattice L = build_lattice(phi, psi);
    PicardLattice pic = picard_gram(L, e.cert);
    RootSystemData rs = root_system(pic.gram_pos);
    BringBackResult bb = bring_back(pic, rs);
    verify_modified_invariants(pic, bb);
    dynkin_action(bb, rs);  // throws unless positive roots are preserved
    e.dynkin = dynkin_string(rs.dynkin);
    e.chi1_tilde = bb.chi1_tilde;
    e.trace_tilde = bb.trace_tilde;
    e.q = q_for_dynkin(*e.dynkin);
    e.verdict = siegel_test(e.cert.special_trace, builtin_q(e.q)).verdict;
    return e;
}

}  // namespace

void sort_canonical(std::vector<SearchEntry>& es) {
    std::sort(es.begin(), es.end(), [](const SearchEntry& a, const SearchEntry& b) {
        int la = label_order(a.psi_label), lb = label_order(b.psi_label);
        if (la != lb) return la < lb;
        if (a.cert.case_no != b.cert.case_no) return a.cert.case_no < b.cert.case_no;
        return a.ks < b.ks;
    });
}

std::vector<SearchEntry> scan_deg22(int i) {
    IntPoly R = salem_trace(i);
    if (trace(R) != -1) throw std::logic_error("trace of R_" + std::to_string(i) + " is not -1");
    std::string label = "R" + std::to_string(i);
    auto jobs = enumerate_ct_products(10, MultiplicityRule::one_multiple_le3, unimodular_indices(R));
    auto out = parallel_map(jobs, [&](const std::vector<long>& ks) -> std::optional<SearchEntry> {
        auto [phi, psi] = pair_from_traces(ct_product(ks), R, 22);
        auto r = k3_certificate(phi, psi, Side::B);
        if (!r.cert) return std::nullopt;
        SearchEntry e{label, ks, *r.cert, {}, {}, {}, {}, Verdict::indeterminate, QLabel::fixed_point};
        e.st_label = "y" + std::to_string(position_from_top(e.cert.special_trace));
        e.verdict = threshold_classify_deg22(e.cert.special_trace);
        return e;
    });
    sort_canonical(out);
    return out;
}

std::vector<SearchEntry> scan_deg22_all() {
    std::vector<SearchEntry> all;
    for (int i = 1; i <= 10; ++i) {
        auto part = scan_deg22(i);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

std::vector<SearchEntry> scan_lehmer(Side side) {
    std::vector<SearchEntry> all;
    if (side == Side::A) {
        for (int i = 1; i <= 10; ++i) {
            IntPoly R = salem_trace(i);
            std::string label = "R" + std::to_string(i);
            auto jobs = enumerate_ct_products(5, MultiplicityRule::sets_only, unimodular_indices(R));
            auto part = parallel_map(jobs, [&](const std::vector<long>& ks) {
                return lehmer_entry(label, ks, lehmer_trace() * ct_product(ks), R, Side::A);
            });
            all.insert(all.end(), part.begin(), part.end());
        }
    } else {
        for (int i = 1; i <= 8; ++i) {
            IntPoly Psi = lehmer_family(i);
            std::string label = "L" + std::to_string(i);
            auto jobs = enumerate_ct_products(10, MultiplicityRule::one_multiple_le3, unimodular_indices(Psi));
            auto part = parallel_map(jobs, [&](const std::vector<long>& ks) {
                return lehmer_entry(label, ks, ct_product(ks), Psi, Side::B);
            });
            all.insert(all.end(), part.begin(), part.end());
        }
    }
    sort_canonical(all);
    return all;
}

}  // namespace hk3
