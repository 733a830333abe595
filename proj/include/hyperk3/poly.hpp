// Dense univariate polynomials over Z and Q.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hk3 {

using Int = mpz_class;
using Rat = mpq_class;

// Coefficients are stored constant term first; the zero polynomial is empty.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Int& a);
    static IntPoly monomial(int deg, const Int& a = 1);
    static IntPoly x() { return monomial(1); }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const Int& lc() const { return c.back(); }
    Int coeff(int i) const;
    void trim();

    bool operator==(const IntPoly& o) const { return c == o.c; }
    bool operator!=(const IntPoly& o) const { return c != o.c; }
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Int& k, const IntPoly& a);
IntPoly pow(const IntPoly& a, unsigned e);

IntPoly derivative(const IntPoly& f);
// f(g(x))
IntPoly compose(const IntPoly& f, const IntPoly& g);
// x^deg f(1/x)
IntPoly reversed(const IntPoly& f);
IntPoly shift_up(const IntPoly& f, int k);  // x^k f

Int eval(const IntPoly& f, const Int& x);
Rat eval(const IntPoly& f, const Rat& x);
// sign of f at a rational point, computed without leaving Z
int sign_at(const IntPoly& f, const Rat& x);

Int content(const IntPoly& f);
// divide by content, make leading coefficient positive
IntPoly primitive(const IntPoly& f);

// Division by a monic (or unit-leading) divisor; throws if the quotient is not integral.
void divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r);
// Exact division; throws std::domain_error if b does not divide a over Z.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);

// Primitive gcd over Q, positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Remainder over Q, returned as a rational polynomial.
std::vector<Rat> rem_q(const IntPoly& a, const IntPoly& b);

// Pairs (g_i, i) with f = content * prod g_i^i, each g_i squarefree and primitive.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);
IntPoly squarefree_part(const IntPoly& f);

// Resultant via the Euclidean remainder sequence over Q.
Int resultant(const IntPoly& f, const IntPoly& g);
// Resultant as the determinant of the Sylvester matrix (slow; used as a check).
Int resultant_sylvester(const IntPoly& f, const IntPoly& g);

enum class Palindromy { palindromic, anti_palindromic, neither };
Palindromy palindrome_class(const IntPoly& f);

// Newton power sum p_m of the roots of a monic polynomial.
Int newton_power_sum(const IntPoly& f, int m);
// Power sums from elementary symmetric values e_1..e_k.
Int power_sum_from_elementary(const std::vector<Int>& e, int m);
// Sum of the roots of a monic polynomial.
Int trace(const IntPoly& f);

std::string to_string(const IntPoly& f, char var = 'x');

}  // namespace hk3
