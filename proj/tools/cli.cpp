#include "cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperk3/catalog.hpp"
#include "hyperk3/hyplattice.hpp"
#include "hyperk3/k3class.hpp"
#include "hyperk3/numfield.hpp"
#include "hyperk3/parser.hpp"
#include "hyperk3/picard.hpp"
#include "hyperk3/search.hpp"
#include "hyperk3/siegel.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace hk3::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string phi, psi, side = "A", family = "deg22", format = "json", refine = "1/1000000000000";
    std::string tau_from, q = "fixed_point", unit, salem, psi_label;
    int root = 0;
    bool strict = false;
};

// Raised for violated input preconditions (exit code 3).
struct Precondition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json jint(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

json jmat(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols; ++j) r.push_back(jint(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

json jvec(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(jint(x));
    return a;
}

Rat parse_width(const std::string& s) {
    if (s.find('/') != std::string::npos) {
        Rat r(s, 10);
        r.canonicalize();
        if (r <= 0) throw ParseError("--refine must be positive");
        return r;
    }
    auto [v, d] = parse_decimal(s);
    if (v <= 0) throw ParseError("--refine must be positive");
    return v;
}

json jreal(AlgebraicReal a, const Rat& width) {
    a.refine(width);
    json j;
    j["minpoly"] = to_string(a.poly, 'w');
    j["interval"] = json::array({a.lo.get_str(), a.hi.get_str()});
    j["approx"] = a.decimal(10);
    return j;
}

IntPoly parse_in(const std::string& text, const char* flag, char* var = nullptr) {
    if (text.empty()) throw ParseError(std::string("missing ") + flag);
    ParsedPoly p = parse_poly(text);
    if (var) *var = p.var;
    return p.poly;
}

Side parse_side(const std::string& s) {
    if (s == "A") return Side::A;
    if (s == "B") return Side::B;
    throw ParseError("--side must be A or B");
}

// (phi, psi) from the --phi/--psi texts; w-expressions are trace polynomials.
std::pair<IntPoly, IntPoly> resolve_pair(const Options& o) {
    char vphi = 0, vpsi = 0;
    IntPoly phi = parse_in(o.phi, "--phi", &vphi), psi = parse_in(o.psi, "--psi", &vpsi);
    if (vpsi == 'w') {
        int n = 2 * psi.deg();
        if (vphi == 'w') return pair_from_traces(phi, psi, n);
        psi = pair_from_traces(IntPoly{1}, psi, n).second;
    }
    int n = psi.deg();
    if (vphi == 'w') return {pair_from_traces(phi, IntPoly::monomial(n / 2), n).first, psi};
    if (phi.deg() == n - 2 && n >= 2 && palindrome_class(phi) == Palindromy::palindromic)
        phi = phi * IntPoly{-1, 0, 1};
    return {phi, psi};
}

json certificate_json(const K3Certificate& c, const Rat& width) {
    json j;
    j["side"] = to_string(c.side);
    j["table"] = c.table;
    j["case"] = c.case_no;
    j["type"] = to_string(c.hodge_type);
    j["special_trace"] = jreal(c.special_trace, width);
    j["special_trace"]["position"] = position_from_top(c.special_trace);
    j["renormalized"] = c.renormalized;
    j["chi0"] = to_string(c.chi0, 'z');
    j["chi1"] = to_string(c.chi1, 'z');
    j["rho"] = c.rho;
    j["projective"] = c.projective;
    return j;
}

K3Certificate require_certificate(const IntPoly& phi, const IntPoly& psi, Side side) {
    auto r = k3_certificate(phi, psi, side);
    if (!r.cert) throw Precondition("not a K3 configuration: " + r.reason);
    return *r.cert;
}

json cmd_build(const Options& o, json& inputs) {
    auto [phi, psi] = resolve_pair(o);
    inputs["phi"] = to_string(phi, 'z');
    inputs["psi"] = to_string(psi, 'z');
    HgLattice L = build_lattice(phi, psi);
    auto tp = trace_polynomial_pair(phi, psi);
    json r;
    r["n"] = L.n;
    r["Phi"] = to_string(tp.Phi, 'w');
    r["Psi"] = to_string(tp.Psi, 'w');
    r["gram_a"] = jmat(L.gram_A);
    r["gram_b"] = jmat(L.gram_B);
    r["mat_a"] = jmat(L.mat_A);
    r["mat_b"] = jmat(L.mat_B);
    r["mat_c"] = jmat(L.mat_C);
    r["disc"] = jint(L.disc);
    r["unimodular"] = is_unimodular(phi, psi);
    auto [p, q] = signature_oracle(L.gram_A);
    r["signature"] = json::array({p, q});
    return r;
}

json cmd_certify(const Options& o, json& inputs, int& code) {
    auto [phi, psi] = resolve_pair(o);
    Side side = parse_side(o.side);
    inputs["phi"] = to_string(phi, 'z');
    inputs["psi"] = to_string(psi, 'z');
    inputs["side"] = o.side;
    auto res = k3_certificate(phi, psi, side);
    json r;
    r["k3"] = res.cert.has_value();
    if (res.cert) {
        r["certificate"] = certificate_json(*res.cert, parse_width(o.refine));
    } else {
        r["reason"] = res.reason;
        if (o.strict) code = none_found;
    }
    return r;
}

json cmd_picard(const Options& o, json& inputs, bool with_bringback) {
    auto [phi, psi] = resolve_pair(o);
    Side side = parse_side(o.side);
    inputs["phi"] = to_string(phi, 'z');
    inputs["psi"] = to_string(psi, 'z');
    inputs["side"] = o.side;
    K3Certificate cert = require_certificate(phi, psi, side);
    if (cert.projective) throw Precondition("projective case: chi0 is cyclotomic");
    HgLattice L = build_lattice(phi, psi);
    PicardLattice pic = picard_gram(L, cert);
    RootSystemData rs = root_system(pic.gram_pos);
    json r;
    r["rho"] = pic.rho;
    r["gram_pos"] = jmat(pic.gram_pos);
    r["roots"] = rs.all_roots.size();
    r["positive_roots"] = rs.positive_roots.size();
    json simple = json::array();
    for (int i : rs.simple_roots) simple.push_back(i + 1);
    r["simple_roots"] = simple;
    r["dynkin"] = dynkin_string(rs.dynkin);
    r["weyl_vector_2"] = jvec(rs.weyl2);
    if (!with_bringback) return r;
    BringBackResult bb = bring_back(pic, rs);
    verify_modified_invariants(pic, bb);
    json word = json::array();
    for (int i : bb.word) word.push_back(i + 1);
    r["word"] = word;
    r["modified"] = jmat(bb.modified);
    r["chi_tilde"] = to_string(bb.chi_tilde, 'z');
    r["chi1_tilde"] = to_string(bb.chi1_tilde, 'z');
    r["chi1_tilde_factors"] = factor_string(classify_product(bb.chi1_tilde));
    r["trace"] = jint(bb.trace_tilde);
    auto perm = dynkin_action(bb, rs);
    r["dynkin_permutation"] = perm;
    json cyc = json::array();
    for (const auto& c : cycles(perm)) cyc.push_back(c);
    r["cycles"] = cyc;
    return r;
}

json cmd_siegel(const Options& o, json& inputs, int& code) {
    char var = 0;
    IntPoly P = parse_in(o.tau_from, "--tau-from", &var);
    if (var == 'z') P = palindromic_to_trace(P);
    QLabel label = parse_qlabel(o.q);
    inputs["tau_from"] = to_string(P, 'w');
    inputs["q"] = o.q;
    if (o.root) inputs["root"] = o.root;
    QFunction q = builtin_q(label);
    IntPoly sqf = primitive(squarefree_part(P));
    if (!is_salem_trace(sqf)) throw Precondition("--tau-from must be a Salem trace polynomial");
    Rat width = parse_width(o.refine);
    json list = json::array();
    bool degree11 = sqf.deg() == 11 && label == QLabel::fixed_point;
    for (auto& t : isolate_squarefree(sqf)) {
        if (compare(t, Rat(2)) > 0) continue;
        int pos = position_from_top(t);
        if (o.root && pos != o.root) continue;
        SiegelVerdict v = siegel_test(t, q);
        json e;
        e["position"] = pos;
        e["tau"] = jreal(t, width);
        e["verdict"] = to_string(v.verdict);
        e["reason"] = v.reason;
        if (v.witness) e["witness"] = jreal(*v.witness, width);
        if (degree11) e["threshold_verdict"] = to_string(threshold_classify_deg22(t));
        if (v.verdict == Verdict::indeterminate && o.strict) code = none_found;
        list.push_back(e);
    }
    if (o.root && list.empty()) throw Precondition("--root is out of range");
    json r;
    r["verdicts"] = list;
    return r;
}

json entry_json(const SearchEntry& e) {
    json j;
    j["psi"] = e.psi_label;
    j["case"] = e.cert.case_no;
    j["table"] = e.cert.table;
    j["k"] = ks_string(e.ks);
    j["st"] = e.st_label;
    if (e.dynkin) {
        j["dynkin"] = *e.dynkin;
        j["chi1_tilde"] = factor_string(classify_product(*e.chi1_tilde));
        j["trace"] = jint(*e.trace_tilde);
    }
    j["verdict"] = to_string(e.verdict);
    return j;
}

std::string entry_tsv(const SearchEntry& e) {
    std::string s = e.psi_label + "\t" + std::to_string(e.cert.case_no) + "\t" + ks_string(e.ks) + "\t" + e.st_label;
    if (e.dynkin)
        s += "\t" + *e.dynkin + "\t" + factor_string(classify_product(*e.chi1_tilde)) + "\t" + e.trace_tilde->get_str();
    return s + "\t" + to_string(e.verdict);
}

int cmd_scan(const Options& o, std::ostream& out) {
    std::vector<SearchEntry> es;
    if (o.family == "deg22") {
        if (!o.psi_label.empty()) {
            if (o.psi_label.size() < 2 || o.psi_label[0] != 'R') throw ParseError("--psi must be R1..R10 for deg22");
            int i = std::stoi(o.psi_label.substr(1));
            if (i < 1 || i > 10) throw ParseError("--psi must be R1..R10 for deg22");
            es = scan_deg22(i);
        } else {
            es = scan_deg22_all();
        }
    } else if (o.family == "lehmerA" || o.family == "lehmerB") {
        es = scan_lehmer(o.family == "lehmerA" ? Side::A : Side::B);
        if (!o.psi_label.empty())
            es.erase(std::remove_if(es.begin(), es.end(), [&](const SearchEntry& e) { return e.psi_label != o.psi_label; }),
                     es.end());
    } else {
        throw ParseError("--family must be deg22, lehmerA or lehmerB");
    }
    for (const auto& e : es) {
        if (o.format == "json") out << entry_json(e).dump() << "\n";
        else out << entry_tsv(e) << "\n";
    }
    return es.empty() && o.strict ? none_found : ok;
}

json cmd_unit(const Options& o, json& inputs, json& warnings) {
    auto [phi, psi] = resolve_pair(o);
    inputs["phi"] = to_string(phi, 'z');
    inputs["psi"] = to_string(psi, 'z');
    HgLattice L = build_lattice(phi, psi);
    auto tp = trace_polynomial_pair(phi, psi);
    IntMat g = L.gram_B;
    auto cert = k3_certificate(phi, psi, Side::B).cert;
    if (cert && cert->renormalized)
        for (auto& x : g.a) x = -x;
    if (!cert) warnings.push_back("no side-B K3 certificate; using the hypergeometric form as built");
    int N = tp.Psi.deg();
    std::vector<Int> row(N);
    for (int j = 0; j < N; ++j) row[j] = g(j, 0);
    UnitData d = unit_from_gram(row, tp.Psi);
    json r;
    r["U"] = to_string(d.U, 'w');
    json u = json::array();
    for (const auto& x : d.u) u.push_back(jint(x));
    r["u"] = u;
    r["R"] = to_string(tp.Psi, 'w');
    auto chk = verify_unit(d.U, tp.Psi);
    r["unit"] = chk.ok;
    Rat width = parse_width(o.refine);
    json comp = json::array();
    for (auto& t : compatible_roots(d.U, tp.Psi)) {
        json c = jreal(t, width);
        c["position"] = position_from_top(t);
        comp.push_back(c);
    }
    r["compatible_roots"] = comp;
    r["trace_form_matches"] = trace_form_gram(d.U, tp.Psi) == g;
    if (cert) {
        AlgebraicReal st = cert->special_trace;
        r["special_trace_compatible"] = verify_unit(d.U, tp.Psi, st).ok;
    }
    return r;
}

json cmd_recover(const Options& o, json& inputs) {
    char vu = 0, vs = 0;
    IntPoly U = parse_in(o.unit, "--unit", &vu);
    IntPoly S = parse_in(o.salem, "--salem", &vs);
    if (vs == 'w') S = trace_to_palindromic(S);
    inputs["unit"] = to_string(U, 'w');
    inputs["salem"] = to_string(S, 'z');
    json r;
    r["Phi"] = to_string(recover_phi(U, S), 'w');
    r["Phi_factors"] = factor_string(classify_trace_product(recover_phi(U, S)), 'w');
    return r;
}

int cmd_catalog(const Options& o, std::ostream& out, json& result) {
    auto cat = list_ct_catalog();
    if (o.format == "tsv" || o.format == "pretty") {
        int deg = 0;
        for (const auto& e : cat) {
            if (o.format == "pretty" && e.deg != deg) out << "degree " << (deg = e.deg) << ":\n";
            if (o.format == "pretty") out << "  " << e.k << (e.unramified ? " (unramified)" : "") << "\n";
            else out << e.deg << "\t" << e.k << "\t" << (e.unramified ? 1 : 0) << "\t" << to_string(cyclotomic_trace(e.k), 'w') << "\n";
        }
        return -1;
    }
    json rows = json::array();
    for (const auto& e : cat) {
        json r;
        r["k"] = e.k;
        r["degree"] = e.deg;
        r["unramified"] = e.unramified;
        r["CT"] = to_string(cyclotomic_trace(e.k), 'w');
        rows.push_back(r);
    }
    result["entries"] = rows;
    result["count"] = cat.size();
    result["unramified"] = std::count_if(cat.begin(), cat.end(), [](const CtEntry& e) { return e.unramified; });
    return 0;
}

void pretty(const json& j, std::ostream& out, const std::string& indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            out << indent << it.key() << ":\n";
            pretty(*it, out, indent + "  ");
        } else {
            out << indent << it.key() << ": " << it->dump() << "\n";
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperk3: hypergeometric K3 lattices and their automorphisms"};
    app.require_subcommand(1);
    Options o;
    auto pair_opts = [&](CLI::App* c) {
        c->add_option("--phi", o.phi, "phi(z), or Phi(w) as a w-expression")->required();
        c->add_option("--psi", o.psi, "psi(z), or Psi(w) as a w-expression")->required();
    };
    auto common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
        c->add_flag("--strict", o.strict, "exit 4 when nothing is classified");
        c->add_option("--refine", o.refine, "isolating interval width for reported reals");
    };
    auto* build = app.add_subcommand("build", "hypergeometric lattice");
    pair_opts(build);
    common(build);
    std::vector<std::pair<CLI::App*, const char*>> sided;
    for (const char* name : {"certify", "picard", "bringback"}) {
        auto* c = app.add_subcommand(name, std::string(name) == "certify" ? "K3 certificate"
                                           : std::string(name) == "picard" ? "Picard lattice and root system"
                                                                           : "bring-back modification");
        pair_opts(c);
        common(c);
        c->add_option("--side", o.side, "A or B");
    }
    auto* siegel = app.add_subcommand("siegel", "Siegel disk test");
    siegel->add_option("--tau-from", o.tau_from, "Salem trace polynomial")->required();
    siegel->add_option("--q", o.q, "fixed_point, e8a2a2, d10 or a2");
    siegel->add_option("--root", o.root, "position from the top inside (-2,2)");
    common(siegel);
    auto* scan = app.add_subcommand("scan", "table scans");
    scan->add_option("--family", o.family, "deg22, lehmerA or lehmerB");
    scan->add_option("--psi", o.psi_label, "restrict to one Psi label");
    common(scan);
    auto* unit = app.add_subcommand("unit", "number-field unit of a lattice");
    pair_opts(unit);
    common(unit);
    auto* recover = app.add_subcommand("recover", "Phi from a unit and a Salem polynomial");
    recover->add_option("--unit", o.unit)->required();
    recover->add_option("--salem", o.salem)->required();
    common(recover);
    auto* catalog = app.add_subcommand("catalog", "cyclotomic trace catalog");
    common(catalog);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return parse_error;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    json report;
    report["command"] = cmd;
    json inputs = json::object(), result = json::object(), warnings = json::array();
    int code = ok;
    try {
        if (cmd == "build") result = cmd_build(o, inputs);
        else if (cmd == "certify") result = cmd_certify(o, inputs, code);
        else if (cmd == "picard") result = cmd_picard(o, inputs, false);
        else if (cmd == "bringback") result = cmd_picard(o, inputs, true);
        else if (cmd == "siegel") result = cmd_siegel(o, inputs, code);
        else if (cmd == "scan") return cmd_scan(o, out);
        else if (cmd == "unit") result = cmd_unit(o, inputs, warnings);
        else if (cmd == "recover") result = cmd_recover(o, inputs);
        else if (cmd == "catalog" && cmd_catalog(o, out, result) < 0) return ok;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const CLI::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const Precondition& e) {
        err << "precondition: " << e.what() << "\n";
        return precondition;
    } catch (const std::invalid_argument& e) {
        err << "precondition: " << e.what() << "\n";
        return precondition;
    } catch (const std::domain_error& e) {
        err << "precondition: " << e.what() << "\n";
        return precondition;
    }
    report["inputs"] = inputs;
    report["result"] = result;
    report["warnings"] = warnings;
    report["exit_code"] = code;
    if (o.format == "pretty") pretty(report, out);
    else out << report.dump(2) << "\n";
    return code;
}

}  // namespace hk3::cli
