#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "kaccoh/matched_pair.hpp"

namespace kaccoh {

/// An element of the grid space: a p-by-q lattice of commuting squares.
/// Vertical edges g_{ij} (1<=i<=p, 0<=j<=q) carry G1 labels, horizontal
/// edges s_{ij} (0<=i<=p, 1<=j<=q) carry G2 labels, and every unit square
/// satisfies s_{i-1,j} * g_{ij} = g_{i,j-1} * s_{ij}.
struct Grid {
    int p = 0, q = 0;
    Eigen::MatrixXi vertical;    // p x (q+1), entry (i-1, j)   = g_{ij}
    Eigen::MatrixXi horizontal;  // (p+1) x q, entry (i, j-1)   = s_{ij}

    Grid() = default;
    Grid(int p_, int q_) : p(p_), q(q_) {
        vertical.setZero(p_, q_ + 1);
        horizontal.setZero(p_ + 1, q_);
    }

    int g(int i, int j) const { return vertical(i - 1, j); }     // 1<=i<=p, 0<=j<=q
    int s(int i, int j) const { return horizontal(i, j - 1); }   // 0<=i<=p, 1<=j<=q
    void set_g(int i, int j, int v) { vertical(i - 1, j) = v; }
    void set_s(int i, int j, int v) { horizontal(i, j - 1) = v; }

    bool operator==(const Grid& o) const {
        return p == o.p && q == o.q && vertical == o.vertical && horizontal == o.horizontal;
    }
};

/// Number of grids: |G1|^p * |G2|^q.
std::int64_t grid_count(const MatchedPair& mp, int p, int q);

/// Unique completion from a left column (p entries of G1) and a top row
/// (q entries of G2), filling squares left-to-right, top-to-bottom.
Grid grid_from_seed(const MatchedPair& mp, const std::vector<int>& left_col,
                    const std::vector<int>& top_row);

/// Mixed-radix rank over (left column, top row) seeds; left column digits
/// are most significant, each digit the position of the edge element within
/// the sorted subgroup list.
std::int64_t grid_rank(const MatchedPair& mp, const Grid& grid);
Grid grid_unrank(const MatchedPair& mp, int p, int q, std::int64_t rank);

/// Contracts the i-th vertex column (0 <= i <= q), multiplying adjacent
/// horizontal edges; lands in the (p, q-1) grid space.
Grid face_horizontal(const MatchedPair& mp, const Grid& grid, int i);

/// Contracts the j-th vertex row (0 <= j <= p); lands in (p-1, q).
Grid face_vertical(const MatchedPair& mp, const Grid& grid, int j);

/// True iff every unit square commutes.
bool grid_is_valid(const MatchedPair& mp, const Grid& grid);

// Square accessors for the 1x1 case (top, right, left, bottom).
inline int square_top(const Grid& x) { return x.s(0, 1); }
inline int square_right(const Grid& x) { return x.g(1, 1); }
inline int square_left(const Grid& x) { return x.g(1, 0); }
inline int square_bottom(const Grid& x) { return x.s(1, 1); }

/// The 1x1 grid with s*g = h*t = x:
/// top = q2(x), right = q1(x), left = p1(x), bottom = p2(x).
Grid square_of_element(const MatchedPair& mp, int x);

/// Product of the edges along the top row then down the right column;
/// by path independence this is the common "corner to corner" product.
int grid_corner_product(const MatchedPair& mp, const Grid& grid);

/// The diagonal embedding of G^n into the n-by-n grid space: x_k sits in
/// the k-th diagonal square, the rest is the unique commuting completion.
Grid grid_from_diagonal(const MatchedPair& mp, const std::vector<int>& xs);

/// Lower-left corner with the (n-i) final rows and the i first columns.
Grid grid_lower_left_corner(const Grid& grid, int i);

/// Appends an all-identity top row and an all-identity last column
/// (new vertical edges of the top row and new horizontal edges of the
/// last column are identities; the duplicated edges are forced).
Grid grid_append_identity_row_col(const MatchedPair& mp, const Grid& grid);

}  // namespace kaccoh
