#include "hyperk3/parser.hpp"

#include "hyperk3/catalog.hpp"

#include <cctype>

namespace hk3 {

namespace {

// Laurent polynomial: poly * var^low
struct Laurent {
    IntPoly poly;
    int low = 0;
    char var = 0;
};

Laurent normalize(Laurent a) {
    if (a.poly.zero()) return {a.poly, 0, a.var};
    int k = 0;
    while (a.poly.c[k] == 0) ++k;
    if (k) {
        a.poly = IntPoly(std::vector<Int>(a.poly.c.begin() + k, a.poly.c.end()));
        a.low += k;
    }
    return a;
}

char join_var(char a, char b) {
    if (a && b && a != b) throw ParseError(std::string("cannot mix variables ") + a + " and " + b);
    return a ? a : b;
}

Laurent add(Laurent a, Laurent b, int sign) {
    char v = join_var(a.var, b.var);
    if (a.poly.zero()) a.low = b.low;
    if (b.poly.zero()) b.low = a.low;
    int low = std::min(a.low, b.low);
    IntPoly pa = shift_up(a.poly, a.low - low), pb = shift_up(b.poly, b.low - low);
    return normalize({sign > 0 ? pa + pb : pa - pb, low, v});
}

Laurent mul(const Laurent& a, const Laurent& b) {
    return normalize({a.poly * b.poly, a.low + b.low, join_var(a.var, b.var)});
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Laurent parse() {
        Laurent r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch) {
        if (!eat(ch)) fail(std::string("expected '") + ch + "'");
    }

    long integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) fail("integer literal too large for an index or exponent");
        return std::stol(s_.substr(start, pos_ - start));
    }

    Laurent expr() {
        Laurent r;
        bool neg = eat('-');
        r = term();
        if (neg) r.poly = -r.poly;
        while (true) {
            if (eat('+')) r = add(r, term(), 1);
            else if (eat('-')) r = add(r, term(), -1);
            else return r;
        }
    }

    Laurent term() {
        Laurent r = factor();
        while (eat('*')) r = mul(r, factor());
        return r;
    }

    Laurent factor() {
        Laurent b = postfix();
        if (eat('^')) {
            long e = integer();
            Laurent r{IntPoly::constant(1), 0, b.var};
            for (long i = 0; i < e; ++i) r = mul(r, b);
            return r;
        }
        return b;
    }

    Laurent postfix() {
        Laurent p = primary();
        skip();
        if (s_.compare(pos_, 2, "@z") == 0) {
            pos_ += 2;
            if (p.var == 'z') fail("@z applies to w-polynomials only");
            if (p.low != 0) fail("@z needs a polynomial argument");
            int d = p.poly.deg();
            return normalize({trace_to_palindromic(p.poly), -std::max(d, 0), 'z'});
        }
        return p;
    }

    std::string ident() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    long paren_index() {
        expect('(');
        long k = integer();
        expect(')');
        return k;
    }

    Laurent primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char ch = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return normalize({IntPoly::constant(Int(s_.substr(start, pos_ - start), 10)), 0, 0});
        }
        if (ch == '(') {
            ++pos_;
            Laurent r = expr();
            expect(')');
            return r;
        }
        std::string id = ident();
        try {
            if (id == "z" || id == "w") return {IntPoly::x(), 0, id[0]};
            if (id == "C") return {cyclotomic(paren_index(), CycloConvention::squared), 0, 'z'};
            if (id == "CT") return {cyclotomic_trace(paren_index()), 0, 'w'};
            if (id == "R") return {salem_trace(static_cast<int>(paren_index())), 0, 'w'};
            if (id == "LNF") return {lehmer_family(static_cast<int>(paren_index())), 0, 'w'};
            if (id == "L") return {lehmer(), 0, 'z'};
            if (id == "LT") return {lehmer_trace(), 0, 'w'};
            if (id == "MT") return {mt_poly(), 0, 'w'};
            if (id == "NT") return {nt_poly(), 0, 'w'};
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        if (id.empty()) fail(std::string("unexpected character '") + ch + "'");
        fail("unknown atom '" + id + "'");
    }
};

}  // namespace

ParsedPoly parse_poly(const std::string& text) {
    Laurent r = Parser(text).parse();
    IntPoly p = r.low >= 0 ? shift_up(r.poly, r.low) : r.poly;
    return {p, r.var};
}

}  // namespace hk3
