// Exact integer and rational matrices.
#pragma once

#include "hyperk3/poly.hpp"

#include <utility>
#include <vector>

namespace hk3 {

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;
using IntVec = std::vector<Int>;

IntMat operator*(const IntMat& x, const IntMat& y);
IntMat operator+(const IntMat& x, const IntMat& y);
IntMat operator-(const IntMat& x, const IntMat& y);
IntMat transpose(const IntMat& m);
IntVec operator*(const IntMat& m, const IntVec& v);
Int dot(const IntVec& u, const IntVec& v);
// u^T G v
Int bilinear(const IntMat& g, const IntVec& u, const IntVec& v);

// Companion matrix Z(f) of a monic polynomial: subdiagonal ones, last column -f_k.
IntMat companion(const IntPoly& f);
// p(M) by Horner.
IntMat poly_eval(const IntPoly& p, const IntMat& m);

// Fraction-free Gaussian elimination.
Int det_bareiss(IntMat m);
// Division-free characteristic polynomial det(xI - M) (Berkowitz).
IntPoly charpoly(const IntMat& m);

// Congruence diagonalization over Q; returns (p, q). Throws on singular input.
std::pair<int, int> signature(const IntMat& g);
// Same, recording every pivot (positive-definiteness checks).
std::vector<Rat> ldl_pivots(const IntMat& g);

// Exact rational solve of a square nonsingular system.
std::vector<Rat> solve(const RatMat& m, const std::vector<Rat>& b);
// Rational inverse.
RatMat inverse(const RatMat& m);
RatMat to_rat(const IntMat& m);

}  // namespace hk3
