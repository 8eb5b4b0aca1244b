#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "kaccoh/errors.hpp"

namespace kaccoh {

using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

template <class S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Sparse integer matrix as produced by the complex builders; entries are
/// tiny (face-count sums), i64 never overflows there.
using SparseMatI = Eigen::SparseMatrix<i64>;

// ---- scalar arithmetic -------------------------------------------------
//
// All elimination code funnels its arithmetic through these overloads.
// The i64 versions detect overflow and throw ArithmeticOverflow; callers
// rerun the computation with BigInt (see with_exact_scalar).

inline i64 s_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("i64 add");
    return r;
}
inline i64 s_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("i64 sub");
    return r;
}
inline i64 s_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("i64 mul");
    return r;
}
inline i64 s_neg(i64 a) {
    if (a == std::numeric_limits<i64>::min()) throw ArithmeticOverflow("i64 neg");
    return -a;
}
inline i64 s_div_exact(i64 a, i64 b) { return a / b; }  // callers guarantee b | a
inline i64 s_abs(i64 a) { return a < 0 ? s_neg(a) : a; }
inline bool s_abs_less(i64 a, i64 b) { return s_abs(a) < s_abs(b); }
inline i64 s_gcd(i64 a, i64 b) {
    a = s_abs(a);
    b = s_abs(b);
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline BigInt s_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt s_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt s_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt s_neg(const BigInt& a) { return -a; }
inline BigInt s_div_exact(const BigInt& a, const BigInt& b) { return a / b; }
inline BigInt s_abs(const BigInt& a) { return boost::multiprecision::abs(a); }
inline bool s_abs_less(const BigInt& a, const BigInt& b) { return s_abs(a) < s_abs(b); }
inline BigInt s_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

/// g = gcd(a, b) > 0 together with x*a + y*b = g.
template <class S>
void s_ext_gcd(const S& a, const S& b, S& g, S& x, S& y) {
    S r0 = a, r1 = b;
    S x0 = S(1), x1 = S(0), y0 = S(0), y1 = S(1);
    while (r1 != S(0)) {
        const S q = r0 / r1;
        S t = s_sub(r0, s_mul(q, r1));
        r0 = r1;
        r1 = t;
        t = s_sub(x0, s_mul(q, x1));
        x0 = x1;
        x1 = t;
        t = s_sub(y0, s_mul(q, y1));
        y0 = y1;
        y1 = t;
    }
    if (r0 < S(0)) {
        r0 = s_neg(r0);
        x0 = s_neg(x0);
        y0 = s_neg(y0);
    }
    g = r0;
    x = x0;
    y = y0;
}

inline i64 to_i64_checked(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<i64>::max()) ||
        v < BigInt(std::numeric_limits<i64>::min()))
        throw ArithmeticOverflow("value exceeds 64-bit range");
    return static_cast<i64>(v);
}
inline i64 to_i64_checked(i64 v) { return v; }
inline BigInt to_big(i64 v) { return BigInt(v); }
inline const BigInt& to_big(const BigInt& v) { return v; }

// ---- sparse column storage ----------------------------------------------

template <class S>
struct SpCol {
    std::vector<std::pair<int, S>> nz;  // sorted by row, values nonzero
};

template <class S>
struct SpColMat {
    int rows = 0;
    std::vector<SpCol<S>> cols;

    int ncols() const { return static_cast<int>(cols.size()); }
};

template <class S>
SpColMat<S> sparse_columns(const SparseMatI& m);

/// Column view of the transpose without materializing it.
template <class S>
SpColMat<S> sparse_columns_of_transpose(const SparseMatI& m);

// ---- eliminations --------------------------------------------------------

/// Result of integer column elimination A -> A*V with V unimodular.
/// Pivots are listed in retirement order; at the moment pivot (r, c) is
/// retired, every other still-active column is zero in row r, so the
/// retired columns form a lower-triangular system in that order.
template <class S>
struct ColumnReduction {
    int rows = 0, cols = 0;
    SpColMat<S> reduced;              // final columns of A*V
    std::vector<int> pivot_rows, pivot_cols;
    std::vector<S> pivot_values;
    std::vector<int> kernel_cols;     // columns of V spanning ker(A), ascending
    DenseMat<S> V, Vinv;              // tracked only when requested
    bool tracked = false;
};

template <class S>
ColumnReduction<S> column_reduce(const SpColMat<S>& a, bool track_transform,
                                 bool track_inverse = true);

/// Same contract on a dense working matrix; the method of choice when the
/// row count is small (the transform updates vectorize instead of churning
/// sparse sets).
template <class S>
ColumnReduction<S> column_reduce_dense(const DenseMat<S>& a, bool track_transform,
                                       bool track_inverse = true);

/// Independent columns spanning the column lattice (image) of `a`.
template <class S>
std::vector<SpCol<S>> image_basis(const SpColMat<S>& a);

/// Smith form with only the row transform tracked: U*A*(col ops) = diag(d),
/// divisibility chain d_1 | d_2 | ..., ones first, then nontrivial factors;
/// diag is padded conceptually with zeros beyond its length.
template <class S>
struct LeftSmith {
    std::vector<S> diag;              // nonzero invariant factors, chain order
    DenseMat<S> U, Uinv;              // rows x rows
};

template <class S>
LeftSmith<S> left_smith(const SpColMat<S>& a);

/// Like left_smith but without the divisibility pass: diag entries are
/// positive pivot values in |value|-ascending order, not invariant factors.
template <class S>
LeftSmith<S> left_diagonalize(const SpColMat<S>& a);

/// Forward-substitution solve of (reduced system) x with A*V*y = b,
/// returning x = V*y; empty optional when b is outside the column lattice.
/// Requires a tracked reduction.
template <class S>
bool solve_in_image(const ColumnReduction<S>& red, const DenseVec<S>& b, DenseVec<S>& x);

// ---- full Smith normal form ----------------------------------------------

/// U*M*V = S with U, V unimodular and S diagonal with a divisibility chain.
/// Exact arithmetic throughout; pivoting picks the smallest nonzero entry.
struct SmithResult {
    DenseMat<BigInt> u, s, v;
};

SmithResult smith_normal_form(const DenseMat<i64>& m);
SmithResult smith_normal_form_big(const DenseMat<BigInt>& m);

/// Exact determinant by fraction-free elimination.
BigInt determinant_big(const DenseMat<BigInt>& m);

/// Plain product of big-integer matrices. Eigen's expression templates are
/// avoided here: overload resolution for mixed scalar products trips over
/// boost's converting constructors.
DenseMat<BigInt> big_mul(const DenseMat<BigInt>& a, const DenseMat<BigInt>& b);
bool mat_eq(const DenseMat<BigInt>& a, const DenseMat<BigInt>& b);
DenseMat<BigInt> big_identity(Eigen::Index n);

/// Runs f with i64 scalars and retries with BigInt when an intermediate
/// value overflows.
template <class F>
auto with_exact_scalar(F&& f) {
    try {
        return f(i64{});
    } catch (const ArithmeticOverflow&) {
        return f(BigInt{});
    }
}

}  // namespace kaccoh
