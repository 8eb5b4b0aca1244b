#include "kaccoh/grid.hpp"

#include <string>

namespace kaccoh {

std::int64_t grid_count(const MatchedPair& mp, int p, int q) {
    std::int64_t count = 1;
    for (int i = 0; i < p; ++i) {
        if (__builtin_mul_overflow(count, static_cast<std::int64_t>(mp.g1_size()), &count))
            throw ArithmeticOverflow("grid count overflows 64 bits");
    }
    for (int j = 0; j < q; ++j) {
        if (__builtin_mul_overflow(count, static_cast<std::int64_t>(mp.g2_size()), &count))
            throw ArithmeticOverflow("grid count overflows 64 bits");
    }
    return count;
}

Grid grid_from_seed(const MatchedPair& mp, const std::vector<int>& left_col,
                    const std::vector<int>& top_row) {
    const int p = static_cast<int>(left_col.size());
    const int q = static_cast<int>(top_row.size());
    Grid x(p, q);
    for (int i = 1; i <= p; ++i) {
        if (mp.g1_pos[left_col[i - 1]] < 0) throw IndexError("left column entry not in G1");
        x.set_g(i, 0, left_col[i - 1]);
    }
    for (int j = 1; j <= q; ++j) {
        if (mp.g2_pos[top_row[j - 1]] < 0) throw IndexError("top row entry not in G2");
        x.set_s(0, j, top_row[j - 1]);
    }
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) {
            auto [right, bottom] = complete_square(mp, x.s(i - 1, j), x.g(i, j - 1));
            x.set_g(i, j, right);
            x.set_s(i, j, bottom);
        }
    return x;
}

std::int64_t grid_rank(const MatchedPair& mp, const Grid& grid) {
    std::int64_t rank = 0;
    for (int i = 1; i <= grid.p; ++i) rank = rank * mp.g1_size() + mp.g1_pos[grid.g(i, 0)];
    for (int j = 1; j <= grid.q; ++j) rank = rank * mp.g2_size() + mp.g2_pos[grid.s(0, j)];
    return rank;
}

Grid grid_unrank(const MatchedPair& mp, int p, int q, std::int64_t rank) {
    const std::int64_t count = grid_count(mp, p, q);
    if (rank < 0 || rank >= count)
        throw RankOutOfRange("rank " + std::to_string(rank) + " not in [0, " +
                             std::to_string(count) + ")");
    std::vector<int> top(q), left(p);
    for (int j = q - 1; j >= 0; --j) {
        top[j] = mp.g2_at(static_cast<int>(rank % mp.g2_size()));
        rank /= mp.g2_size();
    }
    for (int i = p - 1; i >= 0; --i) {
        left[i] = mp.g1_at(static_cast<int>(rank % mp.g1_size()));
        rank /= mp.g1_size();
    }
    return grid_from_seed(mp, left, top);
}

Grid face_horizontal(const MatchedPair& mp, const Grid& grid, int i) {
    if (grid.q < 1) throw FaceIndexOutOfRange("horizontal face requires q >= 1");
    if (i < 0 || i > grid.q)
        throw FaceIndexOutOfRange("horizontal face index " + std::to_string(i) +
                                  " not in 0.." + std::to_string(grid.q));
    Grid out(grid.p, grid.q - 1);
    for (int k = 1; k <= grid.p; ++k)
        for (int j = 0; j <= grid.q - 1; ++j)
            out.set_g(k, j, grid.g(k, j < i ? j : j + 1));
    for (int k = 0; k <= grid.p; ++k)
        for (int j = 1; j <= grid.q - 1; ++j) {
            if (j < i)
                out.set_s(k, j, grid.s(k, j));
            else if (j == i)
                out.set_s(k, j, mp.group.mul(grid.s(k, i), grid.s(k, i + 1)));
            else
                out.set_s(k, j, grid.s(k, j + 1));
        }
    return out;
}

Grid face_vertical(const MatchedPair& mp, const Grid& grid, int j) {
    if (grid.p < 1) throw FaceIndexOutOfRange("vertical face requires p >= 1");
    if (j < 0 || j > grid.p)
        throw FaceIndexOutOfRange("vertical face index " + std::to_string(j) +
                                  " not in 0.." + std::to_string(grid.p));
    Grid out(grid.p - 1, grid.q);
    for (int k = 0; k <= grid.p - 1; ++k)
        for (int c = 1; c <= grid.q; ++c)
            out.set_s(k, c, grid.s(k < j ? k : k + 1, c));
    for (int k = 1; k <= grid.p - 1; ++k)
        for (int c = 0; c <= grid.q; ++c) {
            if (k < j)
                out.set_g(k, c, grid.g(k, c));
            else if (k == j)
                out.set_g(k, c, mp.group.mul(grid.g(j, c), grid.g(j + 1, c)));
            else
                out.set_g(k, c, grid.g(k + 1, c));
        }
    return out;
}

bool grid_is_valid(const MatchedPair& mp, const Grid& grid) {
    for (int i = 1; i <= grid.p; ++i)
        for (int j = 0; j <= grid.q; ++j)
            if (mp.g1_pos[grid.g(i, j)] < 0) return false;
    for (int i = 0; i <= grid.p; ++i)
        for (int j = 1; j <= grid.q; ++j)
            if (mp.g2_pos[grid.s(i, j)] < 0) return false;
    for (int i = 1; i <= grid.p; ++i)
        for (int j = 1; j <= grid.q; ++j)
            if (mp.group.mul(grid.s(i - 1, j), grid.g(i, j)) !=
                mp.group.mul(grid.g(i, j - 1), grid.s(i, j)))
                return false;
    return true;
}

Grid square_of_element(const MatchedPair& mp, int x) {
    Grid out(1, 1);
    out.set_s(0, 1, mp.q2[x]);
    out.set_g(1, 1, mp.q1[x]);
    out.set_g(1, 0, mp.p1[x]);
    out.set_s(1, 1, mp.p2[x]);
    return out;
}

int grid_corner_product(const MatchedPair& mp, const Grid& grid) {
    int acc = mp.group.identity;
    for (int j = 1; j <= grid.q; ++j) acc = mp.group.mul(acc, grid.s(0, j));
    for (int i = 1; i <= grid.p; ++i) acc = mp.group.mul(acc, grid.g(i, grid.q));
    return acc;
}

Grid grid_from_diagonal(const MatchedPair& mp, const std::vector<int>& xs) {
    const int n = static_cast<int>(xs.size());
    Grid x(n, n);
    for (int k = 1; k <= n; ++k) {
        const Grid sq = square_of_element(mp, xs[k - 1]);
        x.set_s(k - 1, k, square_top(sq));
        x.set_g(k, k, square_right(sq));
        x.set_g(k, k - 1, square_left(sq));
        x.set_s(k, k, square_bottom(sq));
    }
    // above the diagonal: square (i,j), j > i, from its left and bottom edges
    for (int d = 1; d <= n - 1; ++d)
        for (int i = 1; i + d <= n; ++i) {
            const int j = i + d;
            const int prod = mp.group.mul(x.g(i, j - 1), x.s(i, j));
            x.set_s(i - 1, j, mp.q2[prod]);
            x.set_g(i, j, mp.q1[prod]);
        }
    // below the diagonal: square (i,j), i > j, from its top and right edges
    for (int d = 1; d <= n - 1; ++d)
        for (int j = 1; j + d <= n; ++j) {
            const int i = j + d;
            const int prod = mp.group.mul(x.s(i - 1, j), x.g(i, j));
            x.set_g(i, j - 1, mp.p1[prod]);
            x.set_s(i, j, mp.p2[prod]);
        }
    return x;
}

Grid grid_lower_left_corner(const Grid& grid, int i) {
    const int n = grid.p;
    if (grid.q != n || i < 0 || i > n) throw IndexError("corner extraction needs 0 <= i <= n");
    Grid out(n - i, i);
    for (int a = 1; a <= n - i; ++a)
        for (int b = 0; b <= i; ++b) out.set_g(a, b, grid.g(i + a, b));
    for (int a = 0; a <= n - i; ++a)
        for (int b = 1; b <= i; ++b) out.set_s(a, b, grid.s(i + a, b));
    return out;
}

Grid grid_append_identity_row_col(const MatchedPair& mp, const Grid& grid) {
    const int n = grid.p;
    if (grid.q != n) throw IndexError("identity extension is defined on square grids");
    const int e = mp.group.identity;
    Grid out(n + 1, n + 1);
    // interior copy: rows 2..n+1, columns 1..n hold the original grid
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n; ++j) out.set_g(i + 1, j, grid.g(i, j));
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.set_s(i + 1, j, grid.s(i, j));
    // top row: identity verticals force duplicated horizontals
    for (int j = 0; j <= n + 1; ++j) out.set_g(1, j, e);
    for (int j = 1; j <= n; ++j) out.set_s(0, j, grid.s(0, j));
    // last column: identity horizontals force duplicated verticals
    for (int i = 0; i <= n + 1; ++i) out.set_s(i, n + 1, e);
    for (int i = 2; i <= n + 1; ++i) out.set_g(i, n + 1, grid.g(i - 1, n));
    return out;
}

}  // namespace kaccoh
