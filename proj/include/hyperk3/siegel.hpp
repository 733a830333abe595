// Siegel disk versus hyperbolic verdicts for fixed points and period-3 cycles.
#pragma once

#include "hyperk3/poly.hpp"
#include "hyperk3/realroot.hpp"

#include <optional>
#include <string>

namespace hk3 {

enum class QLabel { fixed_point, e8a2a2, d10, a2 };
std::string to_string(QLabel l);
QLabel parse_qlabel(const std::string& s);

// q(w) = numerator / denominator
struct QFunction {
    IntPoly numerator, denominator;
    QLabel label;
};

QFunction builtin_q(QLabel label);

enum class Verdict { S, H, indeterminate };
std::string to_string(Verdict v);

struct SiegelVerdict {
    Verdict verdict = Verdict::indeterminate;
    AlgebraicReal tau;
    // S: a conjugate in (-2,2) with q > 4; H: tau itself
    std::optional<AlgebraicReal> witness;
    int q_sign = 0;        // sign of q(tau)
    int q_minus4_sign = 0; // sign of q(tau) - 4
    std::string reason;
};

// Exact sign of q(x) - c at a real algebraic number.
int q_sign_at(const QFunction& q, AlgebraicReal& x, const Int& c = 0);

SiegelVerdict siegel_test(const AlgebraicReal& tau, const QFunction& q);

// tau > 1 - 2 sqrt 2 with a conjugate below it; asserted to agree with siegel_test.
Verdict threshold_classify_deg22(const AlgebraicReal& tau);

// Difference (1 + z) - sum of fixed-point contributions, as num/den in z.
// Each j in arm_terms contributes z / (1 - (z^-j + z^(j+1)) + z).
struct RatFunc {
    IntPoly num, den;
};
RatFunc fixed_point_difference(const std::vector<int>& arm_terms);
bool rational_equal(const RatFunc& a, const RatFunc& b);
// Checks the difference against the Lehmer closed form in both z and w.
bool verify_D_identity(const std::vector<int>& arm_terms = {1, 2, 3, 4, 1, 2, 1});

}  // namespace hk3
