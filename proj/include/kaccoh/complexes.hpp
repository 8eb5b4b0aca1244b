#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kaccoh/exact.hpp"
#include "kaccoh/grid.hpp"

namespace kaccoh {

enum class ComplexKind {
    BarG,
    BarG1,
    BarG2,
    BigTotalD,
    KacC,
    PentagonalE,
    MappingConeM,
    PairK,
};

std::string complex_kind_name(ComplexKind kind);
ComplexKind complex_kind_from_name(const std::string& name);

enum class Direction { Horizontal, Vertical };

/// One direct summand of a graded piece and where it sits in the basis.
/// Gamma blocks are grid spaces (p, q); bar blocks are tuple spaces of the
/// named group; Scalar is a rank-one coefficient copy.
struct BlockRef {
    enum class Tag { Gamma, BarG, BarG1, BarG2, Scalar } tag = Tag::Scalar;
    int p = 0, q = 0;   // Gamma: grid shape; Bar*: p = tuple length
    std::int64_t offset = 0;
    std::int64_t size = 0;
};

/// A graded sequence of free module ranks with integer coboundary matrices
/// (matrices[i] maps degree min_degree+i to min_degree+i+1); d*d = 0 is
/// asserted on construction.
struct CochainComplex {
    ComplexKind kind = ComplexKind::BarG;
    int min_degree = 0;
    int max_degree = 0;
    std::vector<std::int64_t> ranks;              // per degree
    std::vector<SparseMatI> matrices;             // one per degree but the last
    std::vector<std::vector<BlockRef>> blocks;    // per degree

    std::int64_t rank_at(int n) const;
    bool has_degree(int n) const { return n >= min_degree && n <= max_degree; }
    /// d_n, or an empty matrix treated as zero when n is outside the range.
    const SparseMatI& matrix_at(int n) const;
    const std::vector<BlockRef>& blocks_at(int n) const;
};

/// Matrix of d^h : functions(Gamma_pq) -> functions(Gamma_{p,q+1}) (or d^v
/// into (p+1, q)) in the unrank basis, trivial coefficients:
/// entry(Y, X) = sum_i (-1)^i [face_i Y = X].
SparseMatI coboundary_matrix(const MatchedPair& mp, int p, int q, Direction dir);

/// Builds one of the paper's complexes through `max_degree`. Every Gamma or
/// bar block is checked against `block_budget` basis elements before
/// allocation. Total-degree conventions: d = d^h + (-1)^q d^v, blocks
/// ordered by ascending p then unrank order.
CochainComplex build_complex(const MatchedPair& mp, ComplexKind kind, int max_degree,
                             std::int64_t block_budget = 50000);

// Cochain transformations, as matrices between the complexes' bases at one
// degree. All four satisfy their cochain laws exactly; tests assert them.

/// bar_G -> big_total_D: signed sum over monotone lattice paths, the sign
/// being (-1)^(number of squares above the path).
SparseMatI transform_I(const MatchedPair& mp, int n);

/// big_total_D -> bar_G: sum of the lower-left corners P_i of the diagonal
/// grid of the argument tuple.
SparseMatI transform_Iprime(const MatchedPair& mp, int n);

/// big_total_D -> pair_K: projection onto the edge blocks (n,0) and (0,n);
/// at n = 0 the diagonal embedding a -> a + a.
SparseMatI transform_J(const MatchedPair& mp, int n);

/// kac_C -> pentagonal_E; at n = 0 sends a -> (a, 0), for n >= 1 realizes
/// the unique preimage under the injective d^h_{n+1} d^v_0 via the
/// identity-row/column section.
SparseMatI transform_T(const MatchedPair& mp, int n);

/// Restriction of bar_G cochains to bar_G1 or bar_G2 tuples.
SparseMatI transform_restriction(const MatchedPair& mp, int n, int which_subgroup);

/// Rank helpers for bar-type tuple bases.
std::int64_t bar_rank(const std::vector<int>& tuple, int base);

}  // namespace kaccoh
