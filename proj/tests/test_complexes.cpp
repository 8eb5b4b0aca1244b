#include <doctest.h>

#include "helpers.hpp"

using namespace kaccoh;
using namespace kaccoh::testing;

namespace {

bool is_zero(const SparseMatI& m) {
    for (int c = 0; c < m.outerSize(); ++c)
        for (SparseMatI::InnerIterator it(m, c); it; ++it)
            if (it.value() != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("bar and total ranks on the Z6 pair") {
    const MatchedPair mp = z6_pair();
    const CochainComplex bar = build_complex(mp, ComplexKind::BarG, 3);
    CHECK(bar.ranks == std::vector<std::int64_t>{1, 6, 36, 216});

    // kac_C: degree n has rank sum over p+q = n+1, p,q >= 1 of 3^p 2^q
    const CochainComplex c = build_complex(mp, ComplexKind::KacC, 3);
    CHECK(c.ranks == std::vector<std::int64_t>{1, 6, 3 * 4 + 9 * 2, 3 * 8 + 9 * 4 + 27 * 2});

    const CochainComplex d = build_complex(mp, ComplexKind::BigTotalD, 3);
    CHECK(d.rank_at(0) == 1);
    CHECK(d.rank_at(1) == 2 + 3);
    CHECK(d.rank_at(2) == 4 + 6 + 9);

    const CochainComplex k = build_complex(mp, ComplexKind::PairK, 3);
    CHECK(k.ranks == std::vector<std::int64_t>{2, 5, 13, 35});

    const CochainComplex m = build_complex(mp, ComplexKind::MappingConeM, 2);
    CHECK(m.min_degree == -1);
    CHECK(m.rank_at(-1) == 1);
    CHECK(m.rank_at(0) == d.rank_at(1) + 2);

    const CochainComplex e = build_complex(mp, ComplexKind::PentagonalE, 2);
    CHECK(e.ranks == std::vector<std::int64_t>{2, 6, 36});
}

TEST_CASE("d*d = 0 for every kind on every fixture") {
    for (const MatchedPair& mp : all_fixture_pairs())
        for (ComplexKind kind : {ComplexKind::BarG, ComplexKind::BarG1, ComplexKind::BarG2,
                                 ComplexKind::BigTotalD, ComplexKind::KacC,
                                 ComplexKind::PentagonalE, ComplexKind::MappingConeM,
                                 ComplexKind::PairK}) {
            const CochainComplex cx = build_complex(mp, kind, 3);
            for (int n = cx.min_degree; n + 1 < cx.max_degree; ++n)
                CHECK(is_zero(cx.matrix_at(n + 1) * cx.matrix_at(n)));
        }
}

TEST_CASE("horizontal coboundary row sums") {
    for (const MatchedPair& mp : all_fixture_pairs())
        for (auto [p, q] : {std::pair{1, 0}, {1, 1}, {2, 1}}) {
            const SparseMatI d = coboundary_matrix(mp, p, q, Direction::Horizontal);
            const i64 expected = q % 2 == 0 ? 0 : 1;  // sum of (-1)^i, i = 0..q+1
            for (int r = 0; r < d.rows(); ++r) {
                i64 sum = 0;
                for (int c = 0; c < d.outerSize(); ++c)
                    for (SparseMatI::InnerIterator it(d, c); it; ++it)
                        if (it.row() == r) sum += it.value();
                CHECK(sum == expected);
            }
        }
}

TEST_CASE("direct product collapses the one-column horizontal coboundary") {
    const MatchedPair mp = z6_pair();
    CHECK(is_zero(coboundary_matrix(mp, 1, 0, Direction::Horizontal)));
}

TEST_CASE("horizontal and vertical coboundaries commute as matrices") {
    for (const MatchedPair& mp : all_fixture_pairs())
        for (auto [p, q] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
            const SparseMatI hv = coboundary_matrix(mp, p + 1, q, Direction::Horizontal) *
                                  coboundary_matrix(mp, p, q, Direction::Vertical);
            const SparseMatI vh = coboundary_matrix(mp, p, q + 1, Direction::Vertical) *
                                  coboundary_matrix(mp, p, q, Direction::Horizontal);
            CHECK(is_zero(hv - vh));
        }
}

TEST_CASE("horizontal coboundary squares to zero") {
    for (const MatchedPair& mp : all_fixture_pairs()) {
        const SparseMatI d2 = coboundary_matrix(mp, 1, 1, Direction::Horizontal) *
                              coboundary_matrix(mp, 1, 0, Direction::Horizontal);
        CHECK(is_zero(d2));
    }
}

TEST_CASE("budget is enforced per block") {
    const MatchedPair mp = z12_pair();
    CHECK_THROWS_AS(build_complex(mp, ComplexKind::BarG, 4, 1000), BudgetExceeded);
    CHECK_NOTHROW(build_complex(mp, ComplexKind::BarG, 2, 1000));
}

TEST_CASE("kind names round-trip") {
    for (ComplexKind kind : {ComplexKind::BarG, ComplexKind::BarG1, ComplexKind::BarG2,
                             ComplexKind::BigTotalD, ComplexKind::KacC,
                             ComplexKind::PentagonalE, ComplexKind::MappingConeM,
                             ComplexKind::PairK})
        CHECK(complex_kind_from_name(complex_kind_name(kind)) == kind);
    CHECK(complex_kind_from_name("kac") == ComplexKind::KacC);
    CHECK_THROWS_AS(complex_kind_from_name("nope"), SchemaError);
}

TEST_CASE("pentagonal degree-zero coboundary is the constant embedding") {
    const MatchedPair mp = z6_pair();
    const CochainComplex e = build_complex(mp, ComplexKind::PentagonalE, 2);
    const SparseMatI d0 = e.matrix_at(0);
    CHECK(d0.rows() == 6);
    CHECK(d0.cols() == 2);
    for (int r = 0; r < 6; ++r) {
        CHECK(d0.coeff(r, 0) == 0);
        CHECK(d0.coeff(r, 1) == 1);
    }
}
