#pragma once

#include <vector>

#include "kaccoh/grid.hpp"
#include "kaccoh/torus.hpp"

namespace kaccoh {

/// A pair of 2-cochains: U on G2 x G1 x G1 and V on G2 x G2 x G1, written
/// additively with exact circle values. Tables are indexed by positions in
/// the sorted subgroup lists.
struct CocyclePair {
    int n1 = 0, n2 = 0;
    std::vector<TorusValue> u;  // (s * n1 + g) * n1 + h
    std::vector<TorusValue> v;  // (s * n2 + t) * n1 + g

    CocyclePair() = default;
    CocyclePair(int n1_, int n2_)
        : n1(n1_), n2(n2_), u(static_cast<std::size_t>(n2_) * n1_ * n1_),
          v(static_cast<std::size_t>(n2_) * n2_ * n1_) {}

    TorusValue& U(int s, int g, int h) { return u[(static_cast<std::size_t>(s) * n1 + g) * n1 + h]; }
    const TorusValue& U(int s, int g, int h) const {
        return u[(static_cast<std::size_t>(s) * n1 + g) * n1 + h];
    }
    TorusValue& V(int s, int t, int g) { return v[(static_cast<std::size_t>(s) * n2 + t) * n1 + g]; }
    const TorusValue& V(int s, int t, int g) const {
        return v[(static_cast<std::size_t>(s) * n2 + t) * n1 + g];
    }
};

/// A function on G x G (raw element indexing), additively written.
using PentagonalCocycle = std::vector<TorusValue>;  // x * |G| + y

/// A 2-cochain on G2 x G1 (position indexing).
using RCochain = std::vector<TorusValue>;  // s * n1 + g

struct CocycleViolation {
    int identity = 0;            // which displayed relation (1-based)
    std::vector<int> at;         // the quantified tuple, ambient element indices
};

/// Evaluates the three compatible-pair relations over their full index
/// ranges; empty result means (U, V) is a cocycle pair.
std::vector<CocycleViolation> check_pair_cocycle(const MatchedPair& mp, const CocyclePair& pair);

/// The trivial pair attached to R:
///   U_R(s,g,h) = -R(p2(sg),h) + R(s,gh) - R(s,g)
///   V_R(s,t,g) =  R(t,g) - R(st,g) + R(s,p1(tg))
CocyclePair coboundary_pair(const MatchedPair& mp, const RCochain& r);

/// Both 1-cocycle relations for R hold over the full index range.
bool check_one_cocycle(const MatchedPair& mp, const RCochain& r);

/// theta(x,y) + theta(x p1(y), p2(y) z) + theta(y,z)
///   - theta(p2(x) y, z) - theta(x, y p1(z)) = 0 over G^3.
std::vector<CocycleViolation> check_pentagonal_cocycle(const MatchedPair& mp,
                                                       const PentagonalCocycle& theta);

/// theta(x,y) = a(x) + a(p2(x) y) - a(x p1(y)) - a(y).
PentagonalCocycle pentagonal_coboundary(const MatchedPair& mp,
                                        const std::vector<TorusValue>& a);

/// theta~(x,y) = theta(x, p2(x)^{-1} y).
PentagonalCocycle theta_to_thetatilde(const MatchedPair& mp, const PentagonalCocycle& theta);

// Conversions to and from the grid-cochain bases -----------------------------

/// (U, V) as a degree-2 Kac cochain: V on the wide (1,2) block, U on the
/// tall (2,1) block, blocks in ascending-p order.
std::vector<TorusValue> pair_to_kac_cochain(const MatchedPair& mp, const CocyclePair& pair);
CocyclePair kac_cochain_to_pair(const MatchedPair& mp, const std::vector<TorusValue>& cochain);

/// R as the degree-1 Kac cochain on the (1,1) grids: value R(top, right).
std::vector<TorusValue> r_to_kac_cochain(const MatchedPair& mp, const RCochain& r);
RCochain kac_cochain_to_r(const MatchedPair& mp, const std::vector<TorusValue>& cochain);

/// theta as a cochain on the square 2x2 grids via the diagonal bijection.
std::vector<TorusValue> theta_to_pentagonal_cochain(const MatchedPair& mp,
                                                    const PentagonalCocycle& theta);
PentagonalCocycle pentagonal_cochain_to_theta(const MatchedPair& mp,
                                              const std::vector<TorusValue>& cochain);

// Monomial operators and the pentagon equation -------------------------------

/// A phased permutation operator on functions of base^arity points:
/// (W xi)(z) = e(phase[z]) * xi(perm[z]).
struct MonomialOperator {
    int arity = 0;
    int base = 0;
    std::vector<int> perm;
    std::vector<TorusValue> phase;

    std::size_t points() const { return perm.size(); }
    bool operator==(const MonomialOperator& o) const {
        return arity == o.arity && base == o.base && perm == o.perm && phase == o.phase;
    }
};

/// (A*B) xi = A(B xi).
MonomialOperator compose(const MonomialOperator& a, const MonomialOperator& b);

/// Embeds an arity-2 operator on the given legs of a triple product.
MonomialOperator leg_operator(const MonomialOperator& w, int leg_a, int leg_b);

/// W_theta = W_2 theta W_1 realized directly: permutation
/// w(x,y) = (x p1(p2(x)^{-1} y), p2(x)^{-1} y), phase theta(w_2(x,y));
/// the counting-measure Radon-Nikodym factor is identically 1 and the
/// permutation is checked to be a bijection.
MonomialOperator build_W(const MatchedPair& mp, const PentagonalCocycle& theta);

/// W_12 W_13 W_23 = W_23 W_12 by exact table comparison.
bool check_pentagon(const MonomialOperator& w);

}  // namespace kaccoh
