#include "kaccoh/cocycles.hpp"

#include <algorithm>

namespace kaccoh {

namespace {

void require_pair_shape(const MatchedPair& mp, const CocyclePair& pair) {
    if (pair.n1 != mp.g1_size() || pair.n2 != mp.g2_size() ||
        pair.u.size() != static_cast<std::size_t>(pair.n2) * pair.n1 * pair.n1 ||
        pair.v.size() != static_cast<std::size_t>(pair.n2) * pair.n2 * pair.n1)
        throw ShapeMismatch("cocycle pair tables do not match the matched pair");
}

}  // namespace

std::vector<CocycleViolation> check_pair_cocycle(const MatchedPair& mp, const CocyclePair& pair) {
    require_pair_shape(mp, pair);
    const FiniteGroup& gr = mp.group;
    const int n1 = mp.g1_size(), n2 = mp.g2_size();
    std::vector<CocycleViolation> out;

    const auto U = [&](int s_elem, int g_elem, int h_elem) {
        return pair.U(mp.g2_pos[s_elem], mp.g1_pos[g_elem], mp.g1_pos[h_elem]);
    };
    const auto V = [&](int s_elem, int t_elem, int g_elem) {
        return pair.V(mp.g2_pos[s_elem], mp.g2_pos[t_elem], mp.g1_pos[g_elem]);
    };

    // (1) U(p2(sg),h,k) - U(s,gh,k) + U(s,g,hk) - U(s,g,h) = 0
    for (int si = 0; si < n2; ++si)
        for (int gi = 0; gi < n1; ++gi)
            for (int hi = 0; hi < n1; ++hi)
                for (int ki = 0; ki < n1; ++ki) {
                    const int s = mp.g2_at(si), g = mp.g1_at(gi), h = mp.g1_at(hi),
                              k = mp.g1_at(ki);
                    const TorusValue lhs = U(mp.p2[gr.mul(s, g)], h, k) - U(s, gr.mul(g, h), k) +
                                           U(s, g, gr.mul(h, k)) - U(s, g, h);
                    if (!lhs.is_zero()) out.push_back({1, {s, g, h, k}});
                }

    // (2) V(t,r,g) - V(st,r,g) + V(s,tr,g) - V(s,t,p1(rg)) = 0
    for (int si = 0; si < n2; ++si)
        for (int ti = 0; ti < n2; ++ti)
            for (int ri = 0; ri < n2; ++ri)
                for (int gi = 0; gi < n1; ++gi) {
                    const int s = mp.g2_at(si), t = mp.g2_at(ti), r = mp.g2_at(ri),
                              g = mp.g1_at(gi);
                    const TorusValue lhs = V(t, r, g) - V(gr.mul(s, t), r, g) +
                                           V(s, gr.mul(t, r), g) - V(s, t, mp.p1[gr.mul(r, g)]);
                    if (!lhs.is_zero()) out.push_back({2, {s, t, r, g}});
                }

    // (3) U(t,g,h) - U(st,g,h) + U(s,p1(tg),p1(p2(tg)h))
    //     + V(p2(s p1(tg)), p2(tg), h) - V(s,t,gh) + V(s,t,g) = 0
    for (int si = 0; si < n2; ++si)
        for (int ti = 0; ti < n2; ++ti)
            for (int gi = 0; gi < n1; ++gi)
                for (int hi = 0; hi < n1; ++hi) {
                    const int s = mp.g2_at(si), t = mp.g2_at(ti), g = mp.g1_at(gi),
                              h = mp.g1_at(hi);
                    const int tg = gr.mul(t, g);
                    const TorusValue lhs =
                        U(t, g, h) - U(gr.mul(s, t), g, h) +
                        U(s, mp.p1[tg], mp.p1[gr.mul(mp.p2[tg], h)]) +
                        V(mp.p2[gr.mul(s, mp.p1[tg])], mp.p2[tg], h) -
                        V(s, t, gr.mul(g, h)) + V(s, t, g);
                    if (!lhs.is_zero()) out.push_back({3, {s, t, g, h}});
                }
    return out;
}

CocyclePair coboundary_pair(const MatchedPair& mp, const RCochain& r) {
    const int n1 = mp.g1_size(), n2 = mp.g2_size();
    if (r.size() != static_cast<std::size_t>(n1) * n2)
        throw ShapeMismatch("R table has wrong size");
    const FiniteGroup& gr = mp.group;
    const auto R = [&](int s_elem, int g_elem) {
        return r[static_cast<std::size_t>(mp.g2_pos[s_elem]) * n1 + mp.g1_pos[g_elem]];
    };
    CocyclePair out(n1, n2);
    for (int si = 0; si < n2; ++si)
        for (int gi = 0; gi < n1; ++gi) {
            const int s = mp.g2_at(si), g = mp.g1_at(gi);
            for (int hi = 0; hi < n1; ++hi) {
                const int h = mp.g1_at(hi);
                out.U(si, gi, hi) =
                    -R(mp.p2[gr.mul(s, g)], h) + R(s, gr.mul(g, h)) - R(s, g);
            }
        }
    for (int si = 0; si < n2; ++si)
        for (int ti = 0; ti < n2; ++ti)
            for (int gi = 0; gi < n1; ++gi) {
                const int s = mp.g2_at(si), t = mp.g2_at(ti), g = mp.g1_at(gi);
                out.V(si, ti, gi) =
                    R(t, g) - R(gr.mul(s, t), g) + R(s, mp.p1[gr.mul(t, g)]);
            }
    return out;
}

bool check_one_cocycle(const MatchedPair& mp, const RCochain& r) {
    const CocyclePair d = coboundary_pair(mp, r);
    for (const auto& val : d.u)
        if (!val.is_zero()) return false;
    for (const auto& val : d.v)
        if (!val.is_zero()) return false;
    return true;
}

std::vector<CocycleViolation> check_pentagonal_cocycle(const MatchedPair& mp,
                                                       const PentagonalCocycle& theta) {
    const int n = mp.group.order;
    if (theta.size() != static_cast<std::size_t>(n) * n)
        throw ShapeMismatch("theta table has wrong size");
    const FiniteGroup& gr = mp.group;
    const auto T = [&](int x, int y) { return theta[static_cast<std::size_t>(x) * n + y]; };
    std::vector<CocycleViolation> out;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const TorusValue lhs = T(x, y) + T(gr.mul(x, mp.p1[y]), gr.mul(mp.p2[y], z)) +
                                       T(y, z) - T(gr.mul(mp.p2[x], y), z) -
                                       T(x, gr.mul(y, mp.p1[z]));
                if (!lhs.is_zero()) out.push_back({1, {x, y, z}});
            }
    return out;
}

PentagonalCocycle pentagonal_coboundary(const MatchedPair& mp,
                                        const std::vector<TorusValue>& a) {
    const int n = mp.group.order;
    if (a.size() != static_cast<std::size_t>(n)) throw ShapeMismatch("a table has wrong size");
    const FiniteGroup& gr = mp.group;
    PentagonalCocycle out(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out[static_cast<std::size_t>(x) * n + y] =
                a[x] + a[gr.mul(mp.p2[x], y)] - a[gr.mul(x, mp.p1[y])] - a[y];
    return out;
}

PentagonalCocycle theta_to_thetatilde(const MatchedPair& mp, const PentagonalCocycle& theta) {
    const int n = mp.group.order;
    if (theta.size() != static_cast<std::size_t>(n) * n)
        throw ShapeMismatch("theta table has wrong size");
    PentagonalCocycle out(theta.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out[static_cast<std::size_t>(x) * n + y] =
                theta[static_cast<std::size_t>(x) * n +
                      mp.group.mul(mp.group.inv(mp.p2[x]), y)];
    return out;
}

// ---- grid conversions -------------------------------------------------------

std::vector<TorusValue> pair_to_kac_cochain(const MatchedPair& mp, const CocyclePair& pair) {
    require_pair_shape(mp, pair);
    const std::int64_t n12 = grid_count(mp, 1, 2);
    const std::int64_t n21 = grid_count(mp, 2, 1);
    std::vector<TorusValue> out(static_cast<std::size_t>(n12 + n21));
    for (std::int64_t k = 0; k < n12; ++k) {
        const Grid x = grid_unrank(mp, 1, 2, k);
        out[k] = pair.V(mp.g2_pos[x.s(0, 1)], mp.g2_pos[x.s(0, 2)], mp.g1_pos[x.g(1, 2)]);
    }
    for (std::int64_t k = 0; k < n21; ++k) {
        const Grid x = grid_unrank(mp, 2, 1, k);
        out[n12 + k] =
            pair.U(mp.g2_pos[x.s(0, 1)], mp.g1_pos[x.g(1, 1)], mp.g1_pos[x.g(2, 1)]);
    }
    return out;
}

namespace {

// Gamma_{1,2} grid with the given top row and right edge.
Grid wide_grid(const MatchedPair& mp, int s, int t, int g) {
    const FiniteGroup& gr = mp.group;
    const int g11 = mp.p1[gr.mul(t, g)];
    const int g10 = mp.p1[gr.mul(s, g11)];
    return grid_from_seed(mp, {g10}, {s, t});
}

// Gamma_{2,1} grid with the given top edge and right column.
Grid tall_grid(const MatchedPair& mp, int s, int g, int h) {
    const FiniteGroup& gr = mp.group;
    const int g10 = mp.p1[gr.mul(s, g)];
    const int s11 = mp.p2[gr.mul(s, g)];
    const int g20 = mp.p1[gr.mul(s11, h)];
    return grid_from_seed(mp, {g10, g20}, {s});
}

}  // namespace

CocyclePair kac_cochain_to_pair(const MatchedPair& mp, const std::vector<TorusValue>& cochain) {
    const std::int64_t n12 = grid_count(mp, 1, 2);
    const std::int64_t n21 = grid_count(mp, 2, 1);
    if (cochain.size() != static_cast<std::size_t>(n12 + n21))
        throw ShapeMismatch("cochain is not indexed by the (1,2) and (2,1) blocks");
    CocyclePair out(mp.g1_size(), mp.g2_size());
    for (int si = 0; si < mp.g2_size(); ++si)
        for (int ti = 0; ti < mp.g2_size(); ++ti)
            for (int gi = 0; gi < mp.g1_size(); ++gi) {
                const Grid x = wide_grid(mp, mp.g2_at(si), mp.g2_at(ti), mp.g1_at(gi));
                out.V(si, ti, gi) = cochain[grid_rank(mp, x)];
            }
    for (int si = 0; si < mp.g2_size(); ++si)
        for (int gi = 0; gi < mp.g1_size(); ++gi)
            for (int hi = 0; hi < mp.g1_size(); ++hi) {
                const Grid x = tall_grid(mp, mp.g2_at(si), mp.g1_at(gi), mp.g1_at(hi));
                out.U(si, gi, hi) = cochain[n12 + grid_rank(mp, x)];
            }
    return out;
}

std::vector<TorusValue> r_to_kac_cochain(const MatchedPair& mp, const RCochain& r) {
    const int n1 = mp.g1_size();
    if (r.size() != static_cast<std::size_t>(n1) * mp.g2_size())
        throw ShapeMismatch("R table has wrong size");
    const std::int64_t n11 = grid_count(mp, 1, 1);
    std::vector<TorusValue> out(static_cast<std::size_t>(n11));
    for (std::int64_t k = 0; k < n11; ++k) {
        const Grid x = grid_unrank(mp, 1, 1, k);
        out[k] = r[static_cast<std::size_t>(mp.g2_pos[square_top(x)]) * n1 +
                   mp.g1_pos[square_right(x)]];
    }
    return out;
}

RCochain kac_cochain_to_r(const MatchedPair& mp, const std::vector<TorusValue>& cochain) {
    if (cochain.size() != static_cast<std::size_t>(grid_count(mp, 1, 1)))
        throw ShapeMismatch("cochain is not indexed by the (1,1) grids");
    RCochain out(static_cast<std::size_t>(mp.g1_size()) * mp.g2_size());
    for (int si = 0; si < mp.g2_size(); ++si)
        for (int gi = 0; gi < mp.g1_size(); ++gi) {
            // the square with the given top and right edges
            const int s = mp.g2_at(si), g = mp.g1_at(gi);
            const int x = mp.group.mul(s, g);
            out[static_cast<std::size_t>(si) * mp.g1_size() + gi] =
                cochain[grid_rank(mp, square_of_element(mp, x))];
        }
    return out;
}

std::vector<TorusValue> theta_to_pentagonal_cochain(const MatchedPair& mp,
                                                    const PentagonalCocycle& theta) {
    const int n = mp.group.order;
    if (theta.size() != static_cast<std::size_t>(n) * n)
        throw ShapeMismatch("theta table has wrong size");
    const std::int64_t count = grid_count(mp, 2, 2);
    std::vector<TorusValue> out(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) {
        const Grid x = grid_unrank(mp, 2, 2, k);
        const int x1 = mp.group.mul(x.s(0, 1), x.g(1, 1));
        const int x2 = mp.group.mul(x.s(1, 2), x.g(2, 2));
        out[k] = theta[static_cast<std::size_t>(x1) * n + x2];
    }
    return out;
}

PentagonalCocycle pentagonal_cochain_to_theta(const MatchedPair& mp,
                                              const std::vector<TorusValue>& cochain) {
    const int n = mp.group.order;
    if (cochain.size() != static_cast<std::size_t>(grid_count(mp, 2, 2)))
        throw ShapeMismatch("cochain is not indexed by the (2,2) grids");
    PentagonalCocycle out(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out[static_cast<std::size_t>(x) * n + y] =
                cochain[grid_rank(mp, grid_from_diagonal(mp, {x, y}))];
    return out;
}

// ---- monomial operators -----------------------------------------------------

MonomialOperator compose(const MonomialOperator& a, const MonomialOperator& b) {
    if (a.arity != b.arity || a.base != b.base)
        throw ShapeMismatch("operators act on different spaces");
    MonomialOperator out;
    out.arity = a.arity;
    out.base = a.base;
    out.perm.resize(a.perm.size());
    out.phase.resize(a.perm.size());
    for (std::size_t z = 0; z < a.perm.size(); ++z) {
        out.perm[z] = b.perm[a.perm[z]];
        out.phase[z] = a.phase[z] + b.phase[a.perm[z]];
    }
    return out;
}

MonomialOperator leg_operator(const MonomialOperator& w, int leg_a, int leg_b) {
    if (w.arity != 2) throw ShapeMismatch("leg embedding needs an arity-2 operator");
    const int n = w.base;
    MonomialOperator out;
    out.arity = 3;
    out.base = n;
    const std::size_t total = static_cast<std::size_t>(n) * n * n;
    out.perm.resize(total);
    out.phase.resize(total);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int coords[3] = {x, y, z};
                const int pair = coords[leg_a - 1] * n + coords[leg_b - 1];
                const int image = w.perm[pair];
                int mapped[3] = {x, y, z};
                mapped[leg_a - 1] = image / n;
                mapped[leg_b - 1] = image % n;
                const std::size_t idx =
                    (static_cast<std::size_t>(x) * n + y) * n + z;
                out.perm[idx] =
                    (mapped[0] * n + mapped[1]) * n + mapped[2];
                out.phase[idx] = w.phase[pair];
            }
    return out;
}

MonomialOperator build_W(const MatchedPair& mp, const PentagonalCocycle& theta) {
    const int n = mp.group.order;
    if (theta.size() != static_cast<std::size_t>(n) * n)
        throw ShapeMismatch("theta table has wrong size");
    const FiniteGroup& gr = mp.group;
    MonomialOperator out;
    out.arity = 2;
    out.base = n;
    out.perm.resize(static_cast<std::size_t>(n) * n);
    out.phase.resize(static_cast<std::size_t>(n) * n);
    std::vector<char> hit(out.perm.size(), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int yp = gr.mul(gr.inv(mp.p2[x]), y);       // w_2
            const int xp = gr.mul(x, mp.p1[yp]);              // then w_1
            const std::size_t z = static_cast<std::size_t>(x) * n + y;
            out.perm[z] = xp * n + yp;
            out.phase[z] = theta[static_cast<std::size_t>(x) * n + yp];
            hit[out.perm[z]] = 1;
        }
    for (char h : hit)
        if (!h) throw NotBijective("pentagonal transformation failed to be a bijection");
    return out;
}

bool check_pentagon(const MonomialOperator& w) {
    if (w.arity != 2) throw ShapeMismatch("pentagon check needs an arity-2 operator");
    const MonomialOperator w12 = leg_operator(w, 1, 2);
    const MonomialOperator w13 = leg_operator(w, 1, 3);
    const MonomialOperator w23 = leg_operator(w, 2, 3);
    const MonomialOperator lhs = compose(w12, compose(w13, w23));
    const MonomialOperator rhs = compose(w23, w12);
    return lhs == rhs;
}

}  // namespace kaccoh
