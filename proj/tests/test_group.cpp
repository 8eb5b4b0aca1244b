#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"

using namespace kaccoh;
using namespace kaccoh::testing;

TEST_CASE("trivial and cyclic tables build") {
    Eigen::MatrixXi one(1, 1);
    one << 0;
    const FiniteGroup t = build_group_from_table(one);
    CHECK(t.order == 1);
    CHECK(t.identity == 0);

    Eigen::MatrixXi z2(2, 2);
    z2 << 0, 1, 1, 0;
    const FiniteGroup g = build_group_from_table(z2);
    CHECK(g.order == 2);
    CHECK(g.inverse[1] == 1);
}

TEST_CASE("bad tables are rejected") {
    Eigen::MatrixXi repeat(2, 2);
    repeat << 0, 1, 1, 1;
    CHECK_THROWS_AS(build_group_from_table(repeat), NotBijectiveRow);

    // bijective rows/columns but no identity row
    Eigen::MatrixXi latin(3, 3);
    latin << 0, 2, 1, 2, 1, 0, 1, 0, 2;
    CHECK_THROWS_AS(build_group_from_table(latin), NoIdentity);

    // a latin square with identity that fails associativity (order-5 loop)
    Eigen::MatrixXi loop(5, 5);
    loop << 0, 1, 2, 3, 4,
            1, 0, 3, 4, 2,
            2, 3, 4, 0, 1,
            3, 4, 1, 2, 0,
            4, 2, 0, 1, 3;
    CHECK_THROWS_AS(build_group_from_table(loop), NotAssociative);
}

TEST_CASE("permutation closure") {
    const FiniteGroup c3 = build_group_from_permutations(3, {{1, 2, 0}});
    CHECK(c3.order == 3);

    const FiniteGroup s3 = build_group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(s3.order == 6);
    CHECK(s3.identity == 0);

    CHECK_THROWS_AS(build_group_from_permutations(2, {{0, 0}}), NotAPermutation);
    CHECK_THROWS_AS(build_group_from_permutations(5, {{1, 2, 3, 4, 0}}, 3), OrderLimitExceeded);
}

TEST_CASE("group laws hold on all fixtures") {
    for (const FiniteGroup& g : {cyclic_group(6), klein_group(),
                                 build_group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}),
                                 build_group_from_permutations(4, {{1, 2, 3, 0}, {1, 0, 3, 2}})}) {
        for (int a = 0; a < g.order; ++a) {
            CHECK(g.mul(a, g.inv(a)) == g.identity);
            for (int b = 0; b < g.order; ++b)
                for (int c = 0; c < g.order; ++c)
                    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
    }
}

TEST_CASE("subgroup closure") {
    const FiniteGroup z6 = cyclic_group(6);
    CHECK(subgroup_closure(z6, {2}).elements == std::vector<int>{0, 2, 4});
    CHECK(subgroup_closure(z6, {}).elements == std::vector<int>{0});
    CHECK(subgroup_closure(z6, {3}).elements == std::vector<int>{0, 3});

    // idempotence
    const auto once = subgroup_closure(z6, {2, 3});
    CHECK(subgroup_closure(z6, once.elements).elements == once.elements);
    CHECK(is_subgroup(z6, once.elements));
}

namespace {

// exhaustive isomorphism search for small orders
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order != b.order) return false;
    std::vector<int> perm(a.order);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < a.order && ok; ++x)
            for (int y = 0; y < a.order && ok; ++y)
                ok = perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("permutation build matches known Cayley tables up to isomorphism") {
    const FiniteGroup z4 = build_group_from_permutations(4, {{1, 2, 3, 0}});
    CHECK(isomorphic(z4, cyclic_group(4)));
    const FiniteGroup v4 = build_group_from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    CHECK(isomorphic(v4, klein_group()));
    const FiniteGroup s3 = build_group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK_FALSE(isomorphic(s3, cyclic_group(6)));
}
