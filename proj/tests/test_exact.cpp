#include <doctest.h>

#include "helpers.hpp"

using namespace kaccoh;
using namespace kaccoh::testing;

namespace {

DenseMat<BigInt> to_big(const DenseMat<i64>& m) {
    DenseMat<BigInt> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = BigInt(m(i, j));
    return out;
}

void check_snf_contract(const DenseMat<i64>& m) {
    const SmithResult res = smith_normal_form(m);
    CHECK(res.u.rows() == m.rows());
    CHECK(res.v.rows() == m.cols());
    const DenseMat<BigInt> prod = big_mul(big_mul(res.u, to_big(m)), res.v);
    CHECK(mat_eq(prod, res.s));
    CHECK(boost::multiprecision::abs(determinant_big(res.u)) == 1);
    CHECK(boost::multiprecision::abs(determinant_big(res.v)) == 1);
    // diagonal with a divisibility chain
    BigInt prev = 0;
    for (int i = 0; i < std::min(res.s.rows(), res.s.cols()); ++i) {
        for (int j = 0; j < res.s.cols(); ++j)
            if (j != i) CHECK(res.s(i, j) == 0);
        const BigInt d = res.s(i, i);
        CHECK(d >= 0);
        if (prev != 0 && d != 0) CHECK(d % prev == 0);
        if (prev == 0 && i > 0) CHECK(d == 0);
        prev = d;
    }
}

}  // namespace

TEST_CASE("smith normal form examples") {
    DenseMat<i64> zero = DenseMat<i64>::Zero(3, 2);
    const SmithResult z = smith_normal_form(zero);
    CHECK(mat_eq(z.s, DenseMat<BigInt>::Zero(3, 2)));
    CHECK(mat_eq(z.u, big_identity(3)));
    CHECK(mat_eq(z.v, big_identity(2)));

    DenseMat<i64> m(2, 2);
    m << 2, 0, 0, 3;
    const SmithResult r = smith_normal_form(m);
    CHECK(r.s(0, 0) == 1);
    CHECK(r.s(1, 1) == 6);
    check_snf_contract(m);

    DenseMat<i64> eye = DenseMat<i64>::Identity(4, 4);
    const SmithResult e = smith_normal_form(eye);
    CHECK(mat_eq(e.s, big_identity(4)));
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 12);
        const int cols = 1 + static_cast<int>(rng() % 12);
        check_snf_contract(random_int_matrix(rows, cols, 9, rng));
    }
}

TEST_CASE("kernel columns from a column reduction") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = 2 + static_cast<int>(rng() % 6);
        const int cols = 2 + static_cast<int>(rng() % 8);
        const DenseMat<i64> m = random_int_matrix(rows, cols, 4, rng);
        SpColMat<i64> sp;
        sp.rows = rows;
        sp.cols.resize(cols);
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r)
                if (m(r, c) != 0) sp.cols[c].nz.emplace_back(r, m(r, c));
        const ColumnReduction<i64> red = column_reduce(sp, true);
        // A * V = reduced, kernel columns of V are annihilated by A
        for (int kc : red.kernel_cols)
            for (int r = 0; r < rows; ++r) {
                i64 acc = 0;
                for (int c = 0; c < cols; ++c) acc += m(r, c) * red.V(c, kc);
                CHECK(acc == 0);
            }
        // V * Vinv = identity
        DenseMat<i64> prod = DenseMat<i64>::Zero(cols, cols);
        for (int i = 0; i < cols; ++i)
            for (int k = 0; k < cols; ++k)
                for (int j = 0; j < cols; ++j) prod(i, j) += red.V(i, k) * red.Vinv(k, j);
        CHECK(prod == DenseMat<i64>::Identity(cols, cols));

        // dense variant agrees on kernel dimension and pivot count
        const ColumnReduction<i64> dense = column_reduce_dense(m, true);
        CHECK(dense.kernel_cols.size() == red.kernel_cols.size());
        CHECK(dense.pivot_cols.size() == red.pivot_cols.size());
    }
}

TEST_CASE("solve_in_image recovers membership") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = 3 + static_cast<int>(rng() % 5);
        const int cols = 2 + static_cast<int>(rng() % 5);
        const DenseMat<i64> m = random_int_matrix(rows, cols, 3, rng);
        const ColumnReduction<i64> red = column_reduce_dense(m, false);
        // random lattice combination is solvable
        DenseVec<i64> coeff = DenseVec<i64>::Zero(cols);
        for (int c = 0; c < cols; ++c) coeff(c) = static_cast<i64>(rng() % 5) - 2;
        DenseVec<i64> b = DenseVec<i64>::Zero(rows);
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) b(r) += m(r, c) * coeff(c);
        DenseVec<i64> x;
        CHECK(solve_in_image(red, b, x));
        // reassemble from the retired pivot columns
        DenseVec<i64> back = DenseVec<i64>::Zero(rows);
        for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
            for (const auto& [r, v] : red.reduced.cols[red.pivot_cols[i]].nz)
                back(r) += x(static_cast<int>(i)) * v;
        CHECK(back == b);
    }
}

TEST_CASE("left_smith diagonal is the invariant chain") {
    DenseMat<i64> m(2, 2);
    m << 2, 0, 0, 3;
    SpColMat<i64> sp;
    sp.rows = 2;
    sp.cols.resize(2);
    sp.cols[0].nz = {{0, 2}};
    sp.cols[1].nz = {{1, 3}};
    const LeftSmith<i64> ls = left_smith(sp);
    CHECK(ls.diag == std::vector<i64>{1, 6});
}

TEST_CASE("overflow escalates to big integers") {
    // alternating large entries force 64-bit overflow during elimination
    DenseMat<i64> m(2, 2);
    const i64 big = std::int64_t(1) << 62;
    m << big, big - 1, big - 3, big - 7;
    CHECK_NOTHROW(smith_normal_form(m));
    check_snf_contract(m);
}

TEST_CASE("determinant by fraction-free elimination") {
    DenseMat<BigInt> m(3, 3);
    m << 2, 0, 1, 1, 3, 2, 0, 1, 4;
    CHECK(determinant_big(m) == 21);
    DenseMat<BigInt> sing(2, 2);
    sing << 1, 2, 2, 4;
    CHECK(determinant_big(sing) == 0);
}
