#pragma once

#include <random>
#include <vector>

#include "kaccoh/cocycles.hpp"
#include "kaccoh/complexes.hpp"
#include "kaccoh/matched_pair.hpp"

namespace kaccoh::testing {

inline FiniteGroup cyclic_group(int n) {
    Eigen::MatrixXi t(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a, b) = (a + b) % n;
    return build_group_from_table(t);
}

inline FiniteGroup klein_group() {
    Eigen::MatrixXi t(4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t(a, b) = a ^ b;
    return build_group_from_table(t);
}

// Z6 = Z3 * Z2
inline MatchedPair z6_pair() { return build_matched_pair(cyclic_group(6), {0, 2, 4}, {0, 3}); }

// Z2 x Z2, the two bit factors
inline MatchedPair klein_pair() { return build_matched_pair(klein_group(), {0, 1}, {0, 2}); }

// S3 = <3-cycle> * <transposition>
inline MatchedPair s3_pair() {
    const FiniteGroup g = build_group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
    return build_matched_pair(g, subgroup_closure(g, {1}).elements,
                              subgroup_closure(g, {2}).elements);
}

// D4 = <rotation> * <reflection>
inline MatchedPair d4_pair() {
    const FiniteGroup g = build_group_from_permutations(4, {{1, 2, 3, 0}, {1, 0, 3, 2}});
    return build_matched_pair(g, subgroup_closure(g, {1}).elements,
                              subgroup_closure(g, {2}).elements);
}

// Z12 = Z4 * Z3
inline MatchedPair z12_pair() {
    return build_matched_pair(cyclic_group(12), {0, 3, 6, 9}, {0, 4, 8});
}

// the whole group paired with the trivial subgroup
inline MatchedPair full_pair(const FiniteGroup& g) {
    std::vector<int> all(g.order);
    for (int i = 0; i < g.order; ++i) all[i] = i;
    return build_matched_pair(g, all, {g.identity});
}

inline std::vector<MatchedPair> all_fixture_pairs() {
    return {z6_pair(), klein_pair(), s3_pair(), d4_pair(), z12_pair()};
}

inline Grid random_grid(const MatchedPair& mp, int p, int q, std::mt19937_64& rng) {
    return grid_unrank(mp, p, q,
                       static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(
                                                     grid_count(mp, p, q))));
}

inline PentagonalCocycle random_theta(const MatchedPair& mp, int max_den,
                                      std::mt19937_64& rng) {
    const int n = mp.group.order;
    PentagonalCocycle out(static_cast<std::size_t>(n) * n);
    for (auto& v : out)
        v = TorusValue(static_cast<i64>(rng() % static_cast<std::uint64_t>(max_den)), max_den);
    return out;
}

inline std::vector<TorusValue> random_r(const MatchedPair& mp, int max_den,
                                        std::mt19937_64& rng) {
    std::vector<TorusValue> out(static_cast<std::size_t>(mp.g1_size()) * mp.g2_size());
    for (auto& v : out)
        v = TorusValue(static_cast<i64>(rng() % static_cast<std::uint64_t>(max_den)), max_den);
    return out;
}

inline DenseMat<i64> random_int_matrix(int rows, int cols, int bound, std::mt19937_64& rng) {
    DenseMat<i64> m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m(r, c) = static_cast<i64>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    return m;
}

}  // namespace kaccoh::testing
