#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace kaccoh;
using namespace kaccoh::testing;

TEST_CASE("pair construction and rejection") {
    CHECK_NOTHROW(z6_pair());
    CHECK_THROWS_AS(build_matched_pair(cyclic_group(6), {0, 2, 4}, {0, 2, 4}),
                    IntersectionNotTrivial);
    CHECK_THROWS_AS(build_matched_pair(cyclic_group(4), {0, 2}, {0, 2}),
                    IntersectionNotTrivial);
    // subgroups of Z4 other than {0,2} cannot factor it
    CHECK_THROWS_AS(build_matched_pair(cyclic_group(4), {0, 2}, {0}), NotExactFactorization);
    CHECK_THROWS_AS(build_matched_pair(cyclic_group(6), {0, 2, 3}, {0, 3}), NotASubgroup);
}

TEST_CASE("factorizations on the Z6 pair") {
    const MatchedPair mp = z6_pair();
    CHECK(p_factorize(mp, 5) == std::pair<int, int>{2, 3});
    CHECK(p_factorize(mp, 1) == std::pair<int, int>{4, 3});
    CHECK(p_factorize(mp, 0) == std::pair<int, int>{0, 0});
    CHECK(q_factorize(mp, 5) == std::pair<int, int>{3, 2});
    CHECK(q_factorize(mp, 3) == std::pair<int, int>{3, 0});
}

TEST_CASE("factorization laws on every fixture") {
    for (const MatchedPair& mp : all_fixture_pairs()) {
        for (int x = 0; x < mp.group.order; ++x) {
            const auto [g, s] = p_factorize(mp, x);
            CHECK(mp.group.mul(g, s) == x);
            CHECK(mp.g1_pos[g] >= 0);
            CHECK(mp.g2_pos[s] >= 0);
            const auto [t, h] = q_factorize(mp, x);
            CHECK(mp.group.mul(t, h) == x);
            CHECK(mp.g2_pos[t] >= 0);
            CHECK(mp.g1_pos[h] >= 0);
        }
        // p composed with (g,s) -> g*s is the identity on G1 x G2
        for (int g : mp.g1.elements)
            for (int s : mp.g2.elements) {
                CHECK(p_factorize(mp, mp.group.mul(g, s)) == std::pair<int, int>{g, s});
                CHECK(q_factorize(mp, mp.group.mul(s, g)) == std::pair<int, int>{s, g});
            }
    }
}

TEST_CASE("s3 q-factorization forced by the dihedral relation") {
    const MatchedPair mp = s3_pair();
    // G1 = <c> with c the 3-cycle (element 1), G2 = <tau> (element 2)
    const int c = 1, tau = 2;
    const int x = mp.group.mul(c, tau);
    const auto [s, g] = q_factorize(mp, x);
    CHECK(s == tau);
    CHECK(g == mp.group.mul(c, c));  // tau c tau = c^2
}

TEST_CASE("complete_square") {
    const MatchedPair z6 = z6_pair();
    CHECK(complete_square(z6, 3, 2) == std::pair<int, int>{2, 3});  // abelian: g = h, t = s
    for (const MatchedPair& mp : all_fixture_pairs())
        CHECK(complete_square(mp, mp.group.identity, mp.group.identity) ==
              std::pair<int, int>{mp.group.identity, mp.group.identity});

    // exhaustive-search oracle for the unique solution of s*g = h*t
    const MatchedPair s3 = s3_pair();
    for (int s : s3.g2.elements)
        for (int h : s3.g1.elements) {
            int hits = 0;
            std::pair<int, int> expected{-1, -1};
            for (int g : s3.g1.elements)
                for (int t : s3.g2.elements)
                    if (s3.group.mul(s, g) == s3.group.mul(h, t)) {
                        expected = {g, t};
                        ++hits;
                    }
            CHECK(hits == 1);
            CHECK(complete_square(s3, s, h) == expected);
        }
}

TEST_CASE("complete_square with identity top gives the trivial row") {
    for (const MatchedPair& mp : all_fixture_pairs())
        for (int s : mp.g2.elements) {
            const auto [g, t] = complete_square(mp, s, mp.group.identity);
            CHECK(g == mp.group.identity);
            CHECK(t == s);
        }
}

TEST_CASE("unit squares: the four projections and the product map are bijections") {
    for (const MatchedPair& mp : all_fixture_pairs()) {
        const std::int64_t count = grid_count(mp, 1, 1);
        CHECK(count == mp.group.order);
        std::set<std::pair<int, int>> gs, gt, hs, ht;
        std::set<int> prods;
        for (std::int64_t k = 0; k < count; ++k) {
            const Grid x = grid_unrank(mp, 1, 1, k);
            gs.insert({square_right(x), square_top(x)});
            gt.insert({square_right(x), square_bottom(x)});
            hs.insert({square_left(x), square_top(x)});
            ht.insert({square_left(x), square_bottom(x)});
            prods.insert(mp.group.mul(square_top(x), square_right(x)));
        }
        CHECK(static_cast<std::int64_t>(gs.size()) == count);
        CHECK(static_cast<std::int64_t>(gt.size()) == count);
        CHECK(static_cast<std::int64_t>(hs.size()) == count);
        CHECK(static_cast<std::int64_t>(ht.size()) == count);
        CHECK(static_cast<std::int64_t>(prods.size()) == count);
    }
}
