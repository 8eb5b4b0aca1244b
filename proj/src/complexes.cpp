#include "kaccoh/complexes.hpp"

#include <Eigen/SparseCore>
#include <algorithm>
#include <map>

namespace kaccoh {

std::string complex_kind_name(ComplexKind kind) {
    switch (kind) {
        case ComplexKind::BarG: return "bar_G";
        case ComplexKind::BarG1: return "bar_G1";
        case ComplexKind::BarG2: return "bar_G2";
        case ComplexKind::BigTotalD: return "big_total_D";
        case ComplexKind::KacC: return "kac_C";
        case ComplexKind::PentagonalE: return "pentagonal_E";
        case ComplexKind::MappingConeM: return "mapping_cone_M";
        case ComplexKind::PairK: return "pair_K";
    }
    throw IndexError("unknown complex kind");
}

ComplexKind complex_kind_from_name(const std::string& name) {
    static const std::map<std::string, ComplexKind> names = {
        {"bar_G", ComplexKind::BarG},        {"bar_G1", ComplexKind::BarG1},
        {"bar_G2", ComplexKind::BarG2},      {"big_total_D", ComplexKind::BigTotalD},
        {"kac_C", ComplexKind::KacC},        {"kac", ComplexKind::KacC},
        {"pentagonal_E", ComplexKind::PentagonalE}, {"pent", ComplexKind::PentagonalE},
        {"mapping_cone_M", ComplexKind::MappingConeM}, {"cone", ComplexKind::MappingConeM},
        {"pair_K", ComplexKind::PairK},      {"pair", ComplexKind::PairK},
    };
    auto it = names.find(name);
    if (it == names.end()) throw SchemaError("unknown complex kind '" + name + "'");
    return it->second;
}

std::int64_t CochainComplex::rank_at(int n) const {
    if (!has_degree(n)) return 0;
    return ranks[n - min_degree];
}

const SparseMatI& CochainComplex::matrix_at(int n) const {
    static const SparseMatI empty;
    if (n < min_degree || n >= max_degree) return empty;
    return matrices[n - min_degree];
}

const std::vector<BlockRef>& CochainComplex::blocks_at(int n) const {
    static const std::vector<BlockRef> none;
    if (!has_degree(n)) return none;
    return blocks[n - min_degree];
}

namespace {

using Triplet = Eigen::Triplet<i64, std::int64_t>;

std::int64_t ipow_checked(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r)) throw ArithmeticOverflow("rank overflow");
    return r;
}

void check_budget(std::int64_t size, std::int64_t budget) {
    if (size > budget)
        throw BudgetExceeded("block of size " + std::to_string(size) +
                             " exceeds budget " + std::to_string(budget));
}

// ---- bar tuple helpers ----------------------------------------------------

void bar_unrank(std::int64_t rank, int n, int base, std::vector<int>& tuple) {
    tuple.assign(n, 0);
    for (int k = n - 1; k >= 0; --k) {
        tuple[k] = static_cast<int>(rank % base);
        rank /= base;
    }
}

// Multiplication in tuple-digit space: raw indices for the ambient group,
// sorted-list positions for a subgroup.
struct TupleAlg {
    const FiniteGroup* group;
    const std::vector<int>* elems;      // null for ambient
    const std::vector<int>* positions;  // null for ambient

    int mul(int a, int b) const {
        if (!elems) return group->mul(a, b);
        return (*positions)[group->mul((*elems)[a], (*elems)[b])];
    }
    int base() const { return elems ? static_cast<int>(elems->size()) : group->order; }
};

TupleAlg tuple_alg(const MatchedPair& mp, BlockRef::Tag tag) {
    switch (tag) {
        case BlockRef::Tag::BarG: return {&mp.group, nullptr, nullptr};
        case BlockRef::Tag::BarG1: return {&mp.group, &mp.g1.elements, &mp.g1_pos};
        case BlockRef::Tag::BarG2: return {&mp.group, &mp.g2.elements, &mp.g2_pos};
        default: throw IndexError("not a bar block");
    }
}

// d : L(T^n) -> L(T^{n+1}) for the bar complex with trivial coefficients.
SparseMatI bar_coboundary(const TupleAlg& alg, int n) {
    const int base = alg.base();
    const std::int64_t rows = ipow_checked(base, n + 1);
    const std::int64_t cols = ipow_checked(base, n);
    std::vector<Triplet> trips;
    std::vector<int> y, x;
    for (std::int64_t r = 0; r < rows; ++r) {
        bar_unrank(r, n + 1, base, y);
        for (int i = 0; i <= n + 1; ++i) {
            x.clear();
            for (int k = 0; k < n + 1; ++k) {
                if (i == 0 && k == 0) continue;
                if (i == n + 1 && k == n) continue;
                if (i > 0 && i <= n && k == i - 1) continue;
                x.push_back(y[k]);
            }
            if (i > 0 && i <= n) x[i - 1] = alg.mul(y[i - 1], y[i]);
            std::int64_t c = 0;
            for (int v : x) c = c * base + v;
            trips.emplace_back(r, c, (i % 2 == 0) ? 1 : -1);
        }
    }
    SparseMatI m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    m.prune(0, 0);
    return m;
}

}  // namespace

SparseMatI coboundary_matrix(const MatchedPair& mp, int p, int q, Direction dir) {
    const int tp = dir == Direction::Horizontal ? p : p + 1;
    const int tq = dir == Direction::Horizontal ? q + 1 : q;
    const std::int64_t rows = grid_count(mp, tp, tq);
    const std::int64_t cols = grid_count(mp, p, q);
    std::vector<Triplet> trips;
    const int nfaces = dir == Direction::Horizontal ? tq : tp;
    for (std::int64_t r = 0; r < rows; ++r) {
        const Grid y = grid_unrank(mp, tp, tq, r);
        for (int i = 0; i <= nfaces; ++i) {
            const Grid x = dir == Direction::Horizontal ? face_horizontal(mp, y, i)
                                                        : face_vertical(mp, y, i);
            trips.emplace_back(r, grid_rank(mp, x), (i % 2 == 0) ? 1 : -1);
        }
    }
    SparseMatI m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    m.prune(0, 0);
    return m;
}

namespace {

// ---- block layouts ---------------------------------------------------------

std::vector<BlockRef> layout_total(const MatchedPair& mp, int degree_sum, int min_pq,
                                   std::int64_t budget) {
    std::vector<BlockRef> out;
    std::int64_t offset = 0;
    for (int p = min_pq; p + min_pq <= degree_sum; ++p) {
        const int q = degree_sum - p;
        BlockRef b;
        b.tag = BlockRef::Tag::Gamma;
        b.p = p;
        b.q = q;
        b.size = grid_count(mp, p, q);
        check_budget(b.size, budget);
        b.offset = offset;
        offset += b.size;
        out.push_back(b);
    }
    return out;
}

std::vector<BlockRef> layout_bar(const MatchedPair& mp, BlockRef::Tag tag, int n,
                                 std::int64_t budget) {
    BlockRef b;
    b.tag = tag;
    b.p = n;
    b.size = ipow_checked(tuple_alg(mp, tag).base(), n);
    check_budget(b.size, budget);
    b.offset = 0;
    return {b};
}

std::int64_t layout_rank(const std::vector<BlockRef>& blocks) {
    std::int64_t r = 0;
    for (const auto& b : blocks) r += b.size;
    return r;
}

void append_offset_triplets(std::vector<Triplet>& trips, const SparseMatI& m,
                            std::int64_t row_off, std::int64_t col_off, i64 scale) {
    for (int c = 0; c < m.outerSize(); ++c)
        for (SparseMatI::InnerIterator it(m, c); it; ++it)
            trips.emplace_back(row_off + it.row(), col_off + c, scale * it.value());
}

// d = d^h + (-1)^q d^v across the Gamma blocks of two consecutive layouts.
SparseMatI total_coboundary(const MatchedPair& mp, const std::vector<BlockRef>& src,
                            const std::vector<BlockRef>& dst) {
    std::vector<Triplet> trips;
    const auto find_dst = [&](int p, int q) -> const BlockRef* {
        for (const auto& b : dst)
            if (b.p == p && b.q == q) return &b;
        return nullptr;
    };
    for (const auto& b : src) {
        if (const BlockRef* h = find_dst(b.p, b.q + 1)) {
            append_offset_triplets(trips, coboundary_matrix(mp, b.p, b.q, Direction::Horizontal),
                                   h->offset, b.offset, 1);
        }
        if (const BlockRef* v = find_dst(b.p + 1, b.q)) {
            const i64 eps = (b.q % 2 == 0) ? 1 : -1;
            append_offset_triplets(trips, coboundary_matrix(mp, b.p, b.q, Direction::Vertical),
                                   v->offset, b.offset, eps);
        }
    }
    SparseMatI m(layout_rank(dst), layout_rank(src));
    m.setFromTriplets(trips.begin(), trips.end());
    m.prune(0, 0);
    return m;
}

SparseMatI pair_coboundary(const MatchedPair& mp, int n) {
    const SparseMatI d1 = bar_coboundary(tuple_alg(mp, BlockRef::Tag::BarG1), n);
    const SparseMatI d2 = bar_coboundary(tuple_alg(mp, BlockRef::Tag::BarG2), n);
    std::vector<Triplet> trips;
    append_offset_triplets(trips, d1, 0, 0, 1);
    append_offset_triplets(trips, d2, d1.rows(), d1.cols(), 1);
    SparseMatI m(d1.rows() + d2.rows(), d1.cols() + d2.cols());
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

SparseMatI pentagonal_coboundary(const MatchedPair& mp, int n) {
    if (n == 0) {
        // d_pent(a, b) = d(a) + d^h_0 d^v_1(b); the first term vanishes for
        // trivial coefficients, the second is the constant function b.
        const std::int64_t rows = grid_count(mp, 1, 1);
        std::vector<Triplet> trips;
        for (std::int64_t r = 0; r < rows; ++r) trips.emplace_back(r, 1, 1);
        SparseMatI m(rows, 2);
        m.setFromTriplets(trips.begin(), trips.end());
        return m;
    }
    const std::int64_t rows = grid_count(mp, n + 1, n + 1);
    const std::int64_t cols = grid_count(mp, n, n);
    std::vector<Triplet> trips;
    for (std::int64_t r = 0; r < rows; ++r) {
        const Grid y = grid_unrank(mp, n + 1, n + 1, r);
        for (int i = 0; i <= n + 2; ++i) {
            const int ih = std::min(i, n + 1);     // d^h_{n+2} = d^h_{n+1}
            const int iv = std::max(i - 1, 0);     // d^v_{-1} = d^v_0
            const Grid x = face_vertical(mp, face_horizontal(mp, y, ih), iv);
            trips.emplace_back(r, grid_rank(mp, x), (i % 2 == 0) ? 1 : -1);
        }
    }
    SparseMatI m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    m.prune(0, 0);
    return m;
}

bool product_is_zero(const SparseMatI& a, const SparseMatI& b) {
    const SparseMatI prod = a * b;
    for (int c = 0; c < prod.outerSize(); ++c)
        for (SparseMatI::InnerIterator it(prod, c); it; ++it)
            if (it.value() != 0) return false;
    return true;
}

}  // namespace

SparseMatI transform_I(const MatchedPair& mp, int n) {
    std::vector<BlockRef> blocks = layout_total(mp, n, 0, std::numeric_limits<std::int64_t>::max());
    const std::int64_t rows = layout_rank(blocks);
    const std::int64_t cols = ipow_checked(mp.group.order, n);
    std::vector<Triplet> trips;
    for (const auto& b : blocks) {
        for (std::int64_t r = 0; r < b.size; ++r) {
            const Grid x = grid_unrank(mp, b.p, b.q, r);
            // enumerate monotone paths: bitmask with b.p down-steps
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != b.p) continue;
                int i = 0, j = 0, downs = 0, above = 0;
                std::int64_t tuple_rank = 0;
                for (int step = 0; step < n; ++step) {
                    int edge;
                    if (mask & (1u << step)) {  // down
                        edge = x.g(i + 1, j);
                        ++i;
                        ++downs;
                    } else {  // right
                        edge = x.s(i, j + 1);
                        ++j;
                        above += downs;
                    }
                    tuple_rank = tuple_rank * mp.group.order + edge;
                }
                trips.emplace_back(b.offset + r, tuple_rank, (above % 2 == 0) ? 1 : -1);
            }
        }
    }
    SparseMatI m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    m.prune(0, 0);
    return m;
}

SparseMatI transform_Iprime(const MatchedPair& mp, int n) {
    std::vector<BlockRef> blocks = layout_total(mp, n, 0, std::numeric_limits<std::int64_t>::max());
    const std::int64_t rows = ipow_checked(mp.group.order, n);
    const std::int64_t cols = layout_rank(blocks);
    std::vector<Triplet> trips;
    std::vector<int> xs;
    for (std::int64_t r = 0; r < rows; ++r) {
        bar_unrank(r, n, mp.group.order, xs);
        const Grid diag = grid_from_diagonal(mp, xs);
        for (int i = 0; i <= n; ++i) {
            const Grid corner = grid_lower_left_corner(diag, i);
            const BlockRef& b = blocks[n - i];  // ascending p; corner has p = n - i
            trips.emplace_back(r, b.offset + grid_rank(mp, corner), 1);
        }
    }
    SparseMatI m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    m.prune(0, 0);
    return m;
}

SparseMatI transform_J(const MatchedPair& mp, int n) {
    std::vector<BlockRef> blocks = layout_total(mp, n, 0, std::numeric_limits<std::int64_t>::max());
    const std::int64_t n1 = ipow_checked(mp.g1_size(), n);
    const std::int64_t n2 = ipow_checked(mp.g2_size(), n);
    std::vector<Triplet> trips;
    for (const auto& b : blocks) {
        if (b.q == 0) {  // Gamma_{n,0} = G1^n, identical mixed-radix bases
            for (std::int64_t r = 0; r < b.size; ++r) trips.emplace_back(r, b.offset + r, 1);
        }
        if (b.p == 0) {  // Gamma_{0,n} = G2^n
            for (std::int64_t r = 0; r < b.size; ++r) trips.emplace_back(n1 + r, b.offset + r, 1);
        }
    }
    SparseMatI m(n1 + n2, layout_rank(blocks));
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

SparseMatI transform_T(const MatchedPair& mp, int n) {
    if (n == 0) {
        std::vector<Triplet> trips{Triplet(0, 0, 1)};
        SparseMatI m(2, 1);
        m.setFromTriplets(trips.begin(), trips.end());
        return m;
    }
    std::vector<BlockRef> cblocks = layout_total(mp, n + 1, 1, std::numeric_limits<std::int64_t>::max());
    const std::int64_t rows = grid_count(mp, n, n);
    std::vector<Triplet> trips;
    for (std::int64_t r = 0; r < rows; ++r) {
        const Grid y = grid_unrank(mp, n, n, r);
        const Grid ext = grid_append_identity_row_col(mp, y);
        for (int i = 1; i <= n; ++i) {
            const Grid corner = grid_lower_left_corner(ext, i);  // in Gamma_{n+1-i, i}
            const BlockRef& b = cblocks[n - i];                  // ascending p from 1
            trips.emplace_back(r, b.offset + grid_rank(mp, corner), 1);
        }
    }
    SparseMatI m(rows, layout_rank(cblocks));
    m.setFromTriplets(trips.begin(), trips.end());
    m.prune(0, 0);
    return m;
}

SparseMatI transform_restriction(const MatchedPair& mp, int n, int which_subgroup) {
    const auto& sub = which_subgroup == 1 ? mp.g1 : mp.g2;
    const std::int64_t rows = ipow_checked(sub.size(), n);
    const std::int64_t cols = ipow_checked(mp.group.order, n);
    std::vector<Triplet> trips;
    std::vector<int> tuple;
    for (std::int64_t r = 0; r < rows; ++r) {
        bar_unrank(r, n, sub.size(), tuple);
        std::int64_t amb = 0;
        for (int pos : tuple) amb = amb * mp.group.order + sub.elements[pos];
        trips.emplace_back(r, amb, 1);
    }
    SparseMatI m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

std::int64_t bar_rank(const std::vector<int>& tuple, int base) {
    std::int64_t r = 0;
    for (int v : tuple) r = r * base + v;
    return r;
}

CochainComplex build_complex(const MatchedPair& mp, ComplexKind kind, int max_degree,
                             std::int64_t block_budget) {
    if (max_degree < 1) throw SchemaError("max_degree must be >= 1");
    CochainComplex cx;
    cx.kind = kind;
    cx.max_degree = max_degree;
    cx.min_degree = kind == ComplexKind::MappingConeM ? -1 : 0;

    const auto bar_tag = [&]() {
        switch (kind) {
            case ComplexKind::BarG: return BlockRef::Tag::BarG;
            case ComplexKind::BarG1: return BlockRef::Tag::BarG1;
            default: return BlockRef::Tag::BarG2;
        }
    };

    for (int n = cx.min_degree; n <= max_degree; ++n) {
        std::vector<BlockRef> blocks;
        switch (kind) {
            case ComplexKind::BarG:
            case ComplexKind::BarG1:
            case ComplexKind::BarG2:
                blocks = layout_bar(mp, bar_tag(), n, block_budget);
                break;
            case ComplexKind::BigTotalD:
                blocks = layout_total(mp, n, 0, block_budget);
                break;
            case ComplexKind::KacC:
                if (n == 0) {
                    BlockRef b;
                    b.tag = BlockRef::Tag::Scalar;
                    b.size = 1;
                    blocks = {b};
                } else {
                    blocks = layout_total(mp, n + 1, 1, block_budget);
                }
                break;
            case ComplexKind::PairK: {
                blocks = layout_bar(mp, BlockRef::Tag::BarG1, n, block_budget);
                auto b2 = layout_bar(mp, BlockRef::Tag::BarG2, n, block_budget);
                b2[0].offset = blocks[0].size;
                blocks.push_back(b2[0]);
                break;
            }
            case ComplexKind::PentagonalE:
                if (n == 0) {
                    BlockRef a, b;
                    a.tag = b.tag = BlockRef::Tag::Scalar;
                    a.size = b.size = 1;
                    b.offset = 1;
                    blocks = {a, b};
                } else {
                    BlockRef b;
                    b.tag = BlockRef::Tag::Gamma;
                    b.p = b.q = n;
                    b.size = grid_count(mp, n, n);
                    check_budget(b.size, block_budget);
                    blocks = {b};
                }
                break;
            case ComplexKind::MappingConeM: {
                blocks = layout_total(mp, n + 1, 0, block_budget);
                std::int64_t off = layout_rank(blocks);
                if (n >= 0) {
                    auto k1 = layout_bar(mp, BlockRef::Tag::BarG1, n, block_budget);
                    auto k2 = layout_bar(mp, BlockRef::Tag::BarG2, n, block_budget);
                    k1[0].offset = off;
                    k2[0].offset = off + k1[0].size;
                    blocks.push_back(k1[0]);
                    blocks.push_back(k2[0]);
                }
                break;
            }
        }
        cx.blocks.push_back(blocks);
        cx.ranks.push_back(layout_rank(blocks));
    }

    for (int n = cx.min_degree; n < max_degree; ++n) {
        const int idx = n - cx.min_degree;
        SparseMatI d;
        switch (kind) {
            case ComplexKind::BarG:
            case ComplexKind::BarG1:
            case ComplexKind::BarG2:
                d = bar_coboundary(tuple_alg(mp, bar_tag()), n);
                break;
            case ComplexKind::BigTotalD:
                d = total_coboundary(mp, cx.blocks[idx], cx.blocks[idx + 1]);
                break;
            case ComplexKind::KacC:
                if (n == 0) {
                    d = SparseMatI(cx.ranks[idx + 1], 1);  // trivial action: zero map
                } else {
                    d = total_coboundary(mp, cx.blocks[idx], cx.blocks[idx + 1]);
                }
                break;
            case ComplexKind::PairK:
                d = pair_coboundary(mp, n);
                break;
            case ComplexKind::PentagonalE:
                d = pentagonal_coboundary(mp, n);
                break;
            case ComplexKind::MappingConeM: {
                // M^n = D^{n+1} (+) K^n with d(F, G) = (dF, -dG + JF)
                std::vector<BlockRef> dsrc = layout_total(mp, n + 1, 0, block_budget);
                std::vector<BlockRef> ddst = layout_total(mp, n + 2, 0, block_budget);
                const SparseMatI dd = total_coboundary(mp, dsrc, ddst);
                const SparseMatI j = transform_J(mp, n + 1);
                std::vector<Triplet> trips;
                append_offset_triplets(trips, dd, 0, 0, 1);
                append_offset_triplets(trips, j, dd.rows(), 0, 1);
                if (n >= 0) {
                    const SparseMatI dk = pair_coboundary(mp, n);
                    append_offset_triplets(trips, dk, dd.rows(), dd.cols(), -1);
                }
                d = SparseMatI(cx.ranks[idx + 1], cx.ranks[idx]);
                d.setFromTriplets(trips.begin(), trips.end());
                d.prune(0, 0);
                break;
            }
        }
        if (d.rows() != cx.ranks[idx + 1] || d.cols() != cx.ranks[idx])
            throw ShapeMismatch("coboundary dimensions disagree with layout at degree " +
                                std::to_string(n));
        cx.matrices.push_back(std::move(d));
    }

    for (std::size_t i = 0; i + 1 < cx.matrices.size(); ++i)
        if (!product_is_zero(cx.matrices[i + 1], cx.matrices[i]))
            throw Error("InternalCheck", "d*d != 0 in " + complex_kind_name(kind) +
                                             " at degree " +
                                             std::to_string(cx.min_degree + static_cast<int>(i)));
    return cx;
}

}  // namespace kaccoh
