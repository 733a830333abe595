#include "hyperk3/picard.hpp"

#include "hyperk3/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace hk3 {

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_positive(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return x > 0;
    return false;
}

IntVec column(const IntMat& m, int j) {
    IntVec v(m.rows);
    for (int i = 0; i < m.rows; ++i) v[i] = m(i, j);
    return v;
}

// Q(t) = sum_j c_j (t_j + sum_{i<j} M_ji t_i)^2
struct CompletedSquare {
    std::vector<Rat> c;
    std::vector<std::vector<Rat>> M;
};

CompletedSquare complete_squares(const IntMat& g) {
    int n = g.rows;
    CompletedSquare cs;
    cs.c.assign(n, 0);
    cs.M.assign(n, std::vector<Rat>(n, 0));
    for (int j = n - 1; j >= 0; --j) {
        Rat cj = g(j, j);
        for (int k = j + 1; k < n; ++k) cj -= cs.M[k][j] * cs.M[k][j] * cs.c[k];
        if (cj <= 0) throw std::invalid_argument("enumerate_root_system: form is not positive definite");
        cs.c[j] = cj;
        cs.M[j][j] = 1;
        for (int i = 0; i < j; ++i) {
            Rat v = g(j, i);
            for (int k = j + 1; k < n; ++k) v -= cs.M[k][j] * cs.M[k][i] * cs.c[k];
            cs.M[j][i] = v / cj;
        }
    }
    return cs;
}

Int floor_rat(const Rat& x) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return f;
}

void search(const CompletedSquare& cs, std::vector<Int>& t, const Rat& partial, std::vector<IntVec>& out) {
    int j = static_cast<int>(t.size());
    int n = static_cast<int>(cs.c.size());
    if (j == n) {
        if (partial == 1) throw std::logic_error("even form takes the value 1");
        if (partial == 2) out.push_back(t);
        return;
    }
    Rat p = 0;  // t_j - p must be small
    for (int i = 0; i < j; ++i) p -= cs.M[j][i] * t[i];
    Rat room = (2 - partial) / cs.c[j];
    double r = std::sqrt(room.get_d()) + 1;
    Int lo = floor_rat(p) - static_cast<long>(std::ceil(r)), hi = floor_rat(p) + static_cast<long>(std::ceil(r)) + 1;
    for (Int x = lo; x <= hi; ++x) {
        Rat d = Rat(x) - p;
        Rat q = partial + cs.c[j] * d * d;
        if (q > 2) continue;
        t.push_back(x);
        search(cs, t, q, out);
        t.pop_back();
    }
}

IntMat reflection(const IntMat& g, const IntVec& u) {
    // v -> v - <v, u> u
    int n = g.rows;
    IntVec gu = g * u;
    IntMat R = IntMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R(i, j) -= u[i] * gu[j];
    return R;
}

}  // namespace

PicardLattice picard_gram(const HgLattice& L, const K3Certificate& cert) {
    if (cert.projective) throw std::invalid_argument("picard_gram: projective certificate");
    PicardLattice P;
    P.chi0 = cert.chi0;
    P.chi1 = cert.chi1;
    P.rho = cert.rho;
    P.F = cert.side == Side::A ? L.mat_A : L.mat_B;
    P.gram_k3 = L.gram_A;
    if (cert.renormalized)
        for (auto& x : P.gram_k3.a) x = -x;
    int n = L.n, rho = P.rho;
    IntVec s = column(poly_eval(cert.chi0, P.F), 0);
    P.basis = IntMat(n, rho);
    for (int j = 0; j < rho; ++j) {
        for (int i = 0; i < n; ++i) P.basis(i, j) = s[i];
        s = P.F * s;
    }
    P.gram_pos = transpose(P.basis) * P.gram_k3 * P.basis;
    for (auto& x : P.gram_pos.a) x = -x;
    P.F_on_pic = companion(cert.chi1);
    if (rho > 0 && !(P.F * P.basis == P.basis * P.F_on_pic))
        throw std::logic_error("picard_gram: F does not act on the standard basis by the companion of chi1");
    return P;
}

RootSystemData enumerate_root_system(const IntMat& gram_pos) {
    RootSystemData rs;
    if (gram_pos.rows == 0) return rs;
    CompletedSquare cs = complete_squares(gram_pos);
    std::vector<Int> t;
    search(cs, t, 0, rs.all_roots);
    std::sort(rs.all_roots.begin(), rs.all_roots.end(), lex_less);
    return rs;
}

void positive_simple_roots(RootSystemData& rs, const IntMat& gram_pos) {
    rs.positive_roots.clear();
    for (const auto& u : rs.all_roots)
        if (lex_positive(u)) rs.positive_roots.push_back(u);
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), lex_less);
    if (2 * rs.positive_roots.size() != rs.all_roots.size()) throw std::logic_error("roots do not come in +- pairs");
    std::set<IntVec> pos(rs.positive_roots.begin(), rs.positive_roots.end());
    rs.simple_roots.clear();
    for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
        const auto& u = rs.positive_roots[i];
        bool simple = true;
        for (const auto& w : rs.positive_roots) {
            IntVec d(u.size());
            for (size_t k = 0; k < u.size(); ++k) d[k] = u[k] - w[k];
            if (pos.count(d)) {
                simple = false;
                break;
            }
        }
        if (simple) rs.simple_roots.push_back(static_cast<int>(i));
    }
    int rho = gram_pos.rows;
    rs.weyl2.assign(rho, 0);
    for (const auto& u : rs.positive_roots)
        for (int k = 0; k < rho; ++k) rs.weyl2[k] += u[k];
    std::vector<IntVec> simple;
    for (int i : rs.simple_roots) simple.push_back(rs.positive_roots[i]);
    rs.dynkin = dynkin_classify(simple, gram_pos);
}

RootSystemData root_system(const IntMat& gram_pos) {
    RootSystemData rs = enumerate_root_system(gram_pos);
    positive_simple_roots(rs, gram_pos);
    return rs;
}

std::vector<DynkinComponent> dynkin_classify(const std::vector<IntVec>& simple, const IntMat& g) {
    int m = static_cast<int>(simple.size());
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Int b = bilinear(g, simple[i], simple[j]);
            if (b == -1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            } else if (b != 0) {
                throw std::logic_error("simple roots pair to " + b.get_str() + ", not 0 or -1");
            }
        }
    std::vector<int> comp(m, -1);
    std::vector<DynkinComponent> out;
    for (int start = 0; start < m; ++start) {
        if (comp[start] >= 0) continue;
        DynkinComponent dc;
        std::vector<int> stack{start};
        comp[start] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            dc.nodes.push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = comp[start];
                    stack.push_back(w);
                }
        }
        std::sort(dc.nodes.begin(), dc.nodes.end());
        int k = static_cast<int>(dc.nodes.size()), edges = 0, branch = -1;
        for (int v : dc.nodes) {
            edges += static_cast<int>(adj[v].size());
            if (adj[v].size() > 3) throw std::logic_error("Coxeter graph is not simply laced ADE");
            if (adj[v].size() == 3) {
                if (branch >= 0) throw std::logic_error("Coxeter graph has two branch points");
                branch = v;
            }
        }
        if (edges / 2 != k - 1) throw std::logic_error("Coxeter graph has a cycle");
        if (branch < 0) {
            dc.label = "A" + std::to_string(k);
        } else {
            std::vector<int> arms;
            for (int w : adj[branch]) {
                int len = 1, prev = branch, cur = w;
                while (adj[cur].size() == 2) {
                    int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                    prev = cur;
                    cur = nxt;
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms[0] == 1 && arms[1] == 1) dc.label = "D" + std::to_string(k);
            else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) dc.label = "E" + std::to_string(k);
            else throw std::logic_error("Coxeter graph is not of ADE type");
        }
        out.push_back(dc);
    }
    return out;
}

std::string dynkin_string(const std::vector<DynkinComponent>& comps) {
    std::vector<std::string> labels;
    for (const auto& c : comps) labels.push_back(c.label);
    auto key = [](const std::string& s) {
        int letter = s[0] == 'E' ? 0 : s[0] == 'D' ? 1 : 2;
        return std::make_pair(letter, -std::stoi(s.substr(1)));
    };
    std::sort(labels.begin(), labels.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    std::string out;
    for (const auto& l : labels) out += (out.empty() ? "" : "+") + l;
    return out.empty() ? "none" : out;
}

BringBackResult bring_back(const PicardLattice& pic, const RootSystemData& rs, TieBreak tie) {
    BringBackResult bb;
    int rho = pic.rho, n = pic.F.rows;
    const IntMat& G = pic.gram_pos;
    IntMat W = IntMat::identity(rho);
    if (rho > 0) {
        IntVec D = pic.F_on_pic * rs.weyl2;
        IntVec GDelta = G * rs.weyl2;
        std::vector<Int> u_delta;
        for (const auto& u : rs.positive_roots) u_delta.push_back(dot(u, GDelta));
        size_t cap = 4 * rs.positive_roots.size() * rs.positive_roots.size() + 16;
        while (true) {
            IntVec GD = G * D;
            Int best = 0;
            int arg = -1;
            for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
                Int gain = -dot(rs.positive_roots[i], GD) * u_delta[i];
                bool better = gain > best || (tie == TieBreak::highest_index && gain == best && gain > 0);
                if (better) {
                    best = gain;
                    arg = static_cast<int>(i);
                }
            }
            if (arg < 0) break;
            bb.word.push_back(arg);
            IntMat R = reflection(G, rs.positive_roots[arg]);
            D = R * D;
            W = R * W;
            if (bb.word.size() > cap) throw std::logic_error("bring_back: ascent did not terminate");
        }
    }
    bb.pic_action = W * pic.F_on_pic;
    // extend the Weyl element by the identity on the complement of Pic
    IntMat wfull = IntMat::identity(n);
    for (int idx : bb.word) {
        IntVec u = pic.basis * rs.positive_roots[idx];
        IntVec gu = pic.gram_k3 * u;
        // v -> v + (v, u) u, the Picard-Lefschetz reflection for (u, u) = -2
        IntMat R = IntMat::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) R(i, j) += u[i] * gu[j];
        wfull = R * wfull;
    }
    bb.modified = wfull * pic.F;
    bb.chi_tilde = charpoly(bb.modified);
    bb.chi1_tilde = charpoly(bb.pic_action);
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += bb.modified(i, i);
    bb.trace_tilde = tr;
    return bb;
}

void verify_modified_invariants(const PicardLattice& pic, const BringBackResult& bb) {
    if (bb.chi_tilde != pic.chi0 * bb.chi1_tilde)
        throw std::logic_error("modified characteristic polynomial is not chi0 * chi1_tilde");
    for (const auto& f : classify_product(bb.chi1_tilde))
        if (f.tag != FactorTag::cyclotomic) throw std::logic_error("chi1_tilde has a non-cyclotomic factor");
    if (!(transpose(bb.modified) * pic.gram_k3 * bb.modified == pic.gram_k3))
        throw std::logic_error("modified matrix is not an isometry");
    if (pic.rho > 0 && !(bb.modified * pic.basis == pic.basis * bb.pic_action))
        throw std::logic_error("modified matrix does not restrict to Pic");
}

std::vector<int> dynkin_action(const BringBackResult& bb, const RootSystemData& rs) {
    std::map<IntVec, int> where;
    for (size_t k = 0; k < rs.simple_roots.size(); ++k) where[rs.positive_roots[rs.simple_roots[k]]] = static_cast<int>(k);
    std::set<IntVec> pos(rs.positive_roots.begin(), rs.positive_roots.end());
    for (const auto& u : rs.positive_roots)
        if (!pos.count(bb.pic_action * u)) throw std::logic_error("modified map does not preserve the positive roots");
    std::vector<int> perm;
    for (int i : rs.simple_roots) {
        auto it = where.find(bb.pic_action * rs.positive_roots[i]);
        if (it == where.end()) throw std::logic_error("image of a simple root is not simple");
        perm.push_back(it->second);
    }
    return perm;
}

std::vector<std::vector<int>> cycles(const std::vector<int>& perm) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = static_cast<int>(i); !seen[j]; j = perm[j]) {
            seen[j] = true;
            c.push_back(j);
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace hk3
