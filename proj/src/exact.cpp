#include "kaccoh/exact.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace kaccoh {

template <class S>
SpColMat<S> sparse_columns(const SparseMatI& m) {
    SpColMat<S> out;
    out.rows = static_cast<int>(m.rows());
    out.cols.resize(m.cols());
    for (int c = 0; c < m.outerSize(); ++c)
        for (SparseMatI::InnerIterator it(m, c); it; ++it)
            if (it.value() != 0) out.cols[c].nz.emplace_back(static_cast<int>(it.row()), S(it.value()));
    return out;
}

template <class S>
SpColMat<S> sparse_columns_of_transpose(const SparseMatI& m) {
    SpColMat<S> out;
    out.rows = static_cast<int>(m.cols());
    out.cols.resize(m.rows());
    for (int c = 0; c < m.outerSize(); ++c)
        for (SparseMatI::InnerIterator it(m, c); it; ++it)
            if (it.value() != 0) out.cols[it.row()].nz.emplace_back(c, S(it.value()));
    for (auto& col : out.cols)
        std::sort(col.nz.begin(), col.nz.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

namespace {

// Shared sparse elimination engine. Column-major storage plus a row index
// (row -> set of columns with a nonzero there) so both column and row
// operations stay cheap. Transforms are dense and optional:
//   row ops:    U <- E*U,     Uinv <- Uinv*E^{-1}
//   column ops: V <- V*E,     Vinv <- E^{-1}*Vinv
template <class S>
class SparseElim {
public:
    SparseElim(const SpColMat<S>& a, bool track_u, bool track_v, bool track_vinv = true)
        : nrows_(a.rows),
          ncols_(a.ncols()),
          col_(a.cols),
          row_cols_(a.rows),
          track_u_(track_u),
          track_v_(track_v),
          track_vinv_(track_v && track_vinv) {
        for (int c = 0; c < ncols_; ++c)
            for (const auto& [r, v] : col_[c].nz) row_cols_[r].insert(c);
        if (track_u_) {
            u_.setIdentity(nrows_, nrows_);
            uinv_.setIdentity(nrows_, nrows_);
        }
        if (track_v_) {
            v_.setIdentity(ncols_, ncols_);
            if (track_vinv_) vinv_.setIdentity(ncols_, ncols_);
        }
        col_retired_.assign(ncols_, false);
        row_retired_.assign(nrows_, false);
        col_dirty_.assign(ncols_, true);
        col_best_.resize(ncols_);
    }

    // Column elimination only: after this, every non-retired column is zero.
    void run_column_reduction() {
        while (true) {
            auto [r, c] = pick_pivot(/*columns_only=*/true);
            if (c < 0) break;
            clear_pivot_row(r, c);
            retire(r, c);
        }
    }

    // Full diagonalization by row and column operations (no divisibility).
    void run_diagonalization() {
        while (true) {
            auto [r, c] = pick_pivot(/*columns_only=*/false);
            if (c < 0) break;
            while (true) {
                clear_pivot_row(r, c);
                if (!clear_pivot_col(r, c)) break;  // returns true if the row refilled
            }
            retire(r, c);
        }
    }

    // Pairwise divisibility fix so retired values form a chain d1 | d2 | ...
    // Requires both row and column operations (diagonalized state).
    void enforce_divisibility() {
        auto& piv = pivots_;
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t j = i + 1; j < piv.size(); ++j) {
                S& a = std::get<2>(piv[i]);
                S& b = std::get<2>(piv[j]);
                if (b % a == S(0)) continue;
                const int ri = std::get<0>(piv[i]), ci = std::get<1>(piv[i]);
                const int rj = std::get<0>(piv[j]), cj = std::get<1>(piv[j]);
                // diag(a, b) -> diag(g, a*b/g) by the standard 2x2 moves
                S g, x, y;
                s_ext_gcd(a, b, g, x, y);
                const S lcm = s_mul(s_div_exact(a, g), b);
                // col ci += col cj; then rows (ri, rj) gcd-combine; then fix col cj
                apply_col_axpy(ci, cj, S(1));
                apply_row_combine(ri, rj, x, y, s_div_exact(b, g), s_div_exact(a, g));
                // now entry (ri,ci) = g, (ri,cj) = y*b ... clear row ri at cj
                const S rem = value_at(ri, cj);
                if (rem != S(0)) apply_col_axpy(cj, ci, s_neg(s_div_exact(rem, g)));
                a = g;
                b = lcm;
            }
        // make values positive
        for (auto& [r, c, v] : piv)
            if (v < S(0)) {
                apply_row_negate(r);
                v = s_neg(v);
            }
    }

    // Sorts retired pivots by value (ones first) keeping the chain order and
    // permutes them onto leading diagonal slots (0,0), (1,1), ...
    void normalize_positions() {
        for (auto& [r, c, v] : pivots_)
            if (v < S(0)) {
                apply_row_negate(r);
                v = s_neg(v);
            }
        std::stable_sort(pivots_.begin(), pivots_.end(),
                         [](const auto& a, const auto& b) {
                             return s_abs_less(std::get<2>(a), std::get<2>(b));
                         });
        for (int slot = 0; slot < static_cast<int>(pivots_.size()); ++slot) {
            auto& [r, c, v] = pivots_[slot];
            if (r != slot) {
                apply_row_swap(r, slot);
                for (auto& other : pivots_)
                    if (std::get<0>(other) == slot) std::get<0>(other) = r;
                r = slot;
            }
            if (c != slot) {
                apply_col_swap(c, slot);
                for (auto& other : pivots_)
                    if (std::get<1>(other) == slot) std::get<1>(other) = c;
                c = slot;
            }
        }
    }

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }
    const std::vector<std::tuple<int, int, S>>& pivots() const { return pivots_; }
    const DenseMat<S>& u() const { return u_; }
    const DenseMat<S>& uinv() const { return uinv_; }
    const DenseMat<S>& v() const { return v_; }
    const DenseMat<S>& vinv() const { return vinv_; }

    SpColMat<S> extract_matrix() const {
        SpColMat<S> out;
        out.rows = nrows_;
        out.cols = col_;
        return out;
    }

    std::vector<int> zero_columns() const {
        std::vector<int> out;
        for (int c = 0; c < ncols_; ++c)
            if (!col_retired_[c] && col_[c].nz.empty()) out.push_back(c);
        return out;
    }

private:
    int nrows_, ncols_;
    std::vector<SpCol<S>> col_;
    std::vector<std::set<int>> row_cols_;
    std::vector<char> col_retired_, row_retired_;
    std::vector<std::tuple<int, int, S>> pivots_;  // (row, col, value), retirement order
    bool track_u_, track_v_, track_vinv_;
    DenseMat<S> u_, uinv_, v_, vinv_;
    // per-column candidate cache: smallest |value| entry, first row wins
    std::vector<char> col_dirty_;
    std::vector<std::pair<int, S>> col_best_;
    std::vector<std::pair<int, S>> scratch_;

    S value_at(int r, int c) const {
        const auto& nz = col_[c].nz;
        auto it = std::lower_bound(nz.begin(), nz.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it != nz.end() && it->first == r) return it->second;
        return S(0);
    }

    void set_value(int r, int c, const S& val) {
        col_dirty_[c] = true;
        auto& nz = col_[c].nz;
        auto it = std::lower_bound(nz.begin(), nz.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        const bool present = it != nz.end() && it->first == r;
        if (val == S(0)) {
            if (present) {
                nz.erase(it);
                row_cols_[r].erase(c);
            }
        } else if (present) {
            it->second = val;
        } else {
            nz.insert(it, {r, val});
            row_cols_[r].insert(c);
        }
    }

    // Per-column candidate: the first entry of smallest |value| in a live row.
    void refresh_col_best(int c) {
        col_best_[c] = {-1, S(0)};
        for (const auto& [r, v] : col_[c].nz) {
            if (row_retired_[r]) continue;
            if (col_best_[c].first < 0 || s_abs_less(v, col_best_[c].second))
                col_best_[c] = {r, v};
        }
        col_dirty_[c] = false;
    }

    // Markowitz-flavoured pivot: smallest |value| first, then least fill.
    // A unit pivot with zero fill cannot be beaten, so stop scanning there.
    std::pair<int, int> pick_pivot(bool columns_only) {
        int best_r = -1, best_c = -1;
        S best_val = S(0);
        long long best_fill = std::numeric_limits<long long>::max();
        const S one(1);
        for (int c = 0; c < ncols_; ++c) {
            if (col_retired_[c]) continue;
            if (col_dirty_[c]) refresh_col_best(c);
            const auto& [r, v] = col_best_[c];
            if (r < 0) continue;
            const long long fill = static_cast<long long>(col_[c].nz.size() - 1) *
                                   static_cast<long long>(row_cols_[r].size() - 1);
            const bool better = best_c < 0 || s_abs_less(v, best_val) ||
                                (!s_abs_less(best_val, v) && fill < best_fill);
            if (better) {
                best_r = r;
                best_c = c;
                best_val = v;
                best_fill = fill;
                if (best_fill == 0 && !s_abs_less(one, best_val) && !s_abs_less(best_val, one))
                    break;
            }
        }
        (void)columns_only;
        return {best_r, best_c};
    }

    // Column operations -----------------------------------------------------

    // col_dst = ca*col_dst + cb*col_src with incremental row-index upkeep.
    void linear_update_col(int dst, const S& ca, int src, const S& cb) {
        linear_update_col_from(dst, ca, col_[src].nz, cb);
    }

    void apply_col_axpy(int dst, int src, const S& t) {
        // col_dst += t * col_src
        if (t == S(0)) return;
        linear_update_col(dst, S(1), src, t);
        if (track_v_)
            for (int i = 0; i < ncols_; ++i) v_(i, dst) = s_add(v_(i, dst), s_mul(t, v_(i, src)));
        if (track_vinv_)
            for (int i = 0; i < ncols_; ++i)
                vinv_(src, i) = s_sub(vinv_(src, i), s_mul(t, vinv_(dst, i)));
    }

    // (col_c, col_j) <- (a*col_c + b*col_j, -(w/g)*col_c + (v/g)*col_j)
    void apply_col_combine(int c, int j, const S& a, const S& b, const S& wg, const S& vg) {
        const std::vector<std::pair<int, S>> old_c = col_[c].nz;
        linear_update_col(c, a, j, b);
        linear_update_col_from(j, vg, old_c, s_neg(wg));
        if (track_v_)
            for (int i = 0; i < ncols_; ++i) {
                const S vc = v_(i, c), vj = v_(i, j);
                v_(i, c) = s_add(s_mul(a, vc), s_mul(b, vj));
                v_(i, j) = s_add(s_mul(s_neg(wg), vc), s_mul(vg, vj));
            }
        if (track_vinv_)
            for (int i = 0; i < ncols_; ++i) {
                const S rc = vinv_(c, i), rj = vinv_(j, i);
                vinv_(c, i) = s_add(s_mul(vg, rc), s_mul(wg, rj));
                vinv_(j, i) = s_add(s_mul(s_neg(b), rc), s_mul(a, rj));
            }
    }

    // col_dst = ca*col_dst + cb*(given column content)
    void linear_update_col_from(int dst, const S& ca, const std::vector<std::pair<int, S>>& s,
                                const S& cb) {
        auto& d = col_[dst].nz;
        scratch_.clear();
        scratch_.reserve(d.size() + s.size());
        std::size_t i = 0, j = 0;
        const bool scale_dst = !(ca == S(1));
        while (i < d.size() || j < s.size()) {
            if (j == s.size() || (i < d.size() && d[i].first < s[j].first)) {
                const S val = scale_dst ? s_mul(ca, d[i].second) : d[i].second;
                if (val != S(0))
                    scratch_.emplace_back(d[i].first, val);
                else
                    row_cols_[d[i].first].erase(dst);
                ++i;
            } else if (i == d.size() || s[j].first < d[i].first) {
                const S val = s_mul(cb, s[j].second);
                if (val != S(0)) {
                    scratch_.emplace_back(s[j].first, val);
                    row_cols_[s[j].first].insert(dst);
                }
                ++j;
            } else {
                const S val = s_add(scale_dst ? s_mul(ca, d[i].second) : d[i].second,
                                    s_mul(cb, s[j].second));
                if (val != S(0))
                    scratch_.emplace_back(d[i].first, val);
                else
                    row_cols_[d[i].first].erase(dst);
                ++i;
                ++j;
            }
        }
        d.swap(scratch_);
        col_dirty_[dst] = true;
    }

    void apply_col_swap(int a, int b) {
        if (a == b) return;
        std::vector<std::pair<int, S>> ca = col_[a].nz, cb = col_[b].nz;
        assign_col(a, std::move(cb));
        assign_col(b, std::move(ca));
        std::swap(col_retired_[a], col_retired_[b]);
        if (track_v_)
            for (int i = 0; i < ncols_; ++i) std::swap(v_(i, a), v_(i, b));
        if (track_vinv_)
            for (int i = 0; i < ncols_; ++i) std::swap(vinv_(a, i), vinv_(b, i));
    }

    // Row operations ---------------------------------------------------------

    void apply_row_negate(int r) {
        for (int c : std::vector<int>(row_cols_[r].begin(), row_cols_[r].end()))
            set_value(r, c, s_neg(value_at(r, c)));
        if (track_u_) {
            for (int i = 0; i < nrows_; ++i) u_(r, i) = s_neg(u_(r, i));
            for (int i = 0; i < nrows_; ++i) uinv_(i, r) = s_neg(uinv_(i, r));
        }
    }

    void apply_row_swap(int a, int b) {
        if (a == b) return;
        std::set<int> cols;
        cols.insert(row_cols_[a].begin(), row_cols_[a].end());
        cols.insert(row_cols_[b].begin(), row_cols_[b].end());
        for (int c : cols) {
            const S va = value_at(a, c), vb = value_at(b, c);
            set_value(a, c, vb);
            set_value(b, c, va);
        }
        std::swap(row_retired_[a], row_retired_[b]);
        if (track_u_) {
            for (int i = 0; i < nrows_; ++i) std::swap(u_(a, i), u_(b, i));
            for (int i = 0; i < nrows_; ++i) std::swap(uinv_(i, a), uinv_(i, b));
        }
    }

    // (row_r, row_i) <- (x*row_r + y*row_i, -(b/g)*row_r + (a/g)*row_i)
    // where a = old (r,.) pivot-ish value, b = old (i,.) value.
    void apply_row_combine(int r, int i, const S& x, const S& y, const S& bg, const S& ag) {
        std::set<int> cols;
        cols.insert(row_cols_[r].begin(), row_cols_[r].end());
        cols.insert(row_cols_[i].begin(), row_cols_[i].end());
        for (int c : cols) {
            const S vr = value_at(r, c), vi = value_at(i, c);
            set_value(r, c, s_add(s_mul(x, vr), s_mul(y, vi)));
            set_value(i, c, s_add(s_mul(s_neg(bg), vr), s_mul(ag, vi)));
        }
        if (track_u_) {
            for (int k = 0; k < nrows_; ++k) {
                const S ur = u_(r, k), ui = u_(i, k);
                u_(r, k) = s_add(s_mul(x, ur), s_mul(y, ui));
                u_(i, k) = s_add(s_mul(s_neg(bg), ur), s_mul(ag, ui));
            }
            for (int k = 0; k < nrows_; ++k) {
                const S cr = uinv_(k, r), ci = uinv_(k, i);
                uinv_(k, r) = s_add(s_mul(ag, cr), s_mul(bg, ci));
                uinv_(k, i) = s_add(s_mul(s_neg(y), cr), s_mul(x, ci));
            }
        }
    }

    void apply_row_axpy(int dst, int src, const S& t) {
        // row_dst += t * row_src
        if (t == S(0)) return;
        for (int c : std::vector<int>(row_cols_[src].begin(), row_cols_[src].end()))
            set_value(dst, c, s_add(value_at(dst, c), s_mul(t, value_at(src, c))));
        if (track_u_) {
            for (int k = 0; k < nrows_; ++k) u_(dst, k) = s_add(u_(dst, k), s_mul(t, u_(src, k)));
            for (int k = 0; k < nrows_; ++k)
                uinv_(k, src) = s_sub(uinv_(k, src), s_mul(t, uinv_(k, dst)));
        }
    }

    // Core steps --------------------------------------------------------------

    void clear_pivot_row(int r, int c) {
        while (true) {
            int other = -1;
            for (int cc : row_cols_[r])
                if (cc != c && !col_retired_[cc]) {
                    other = cc;
                    break;
                }
            if (other < 0) break;
            const S v = value_at(r, c), w = value_at(r, other);
            if (w % v == S(0)) {
                apply_col_axpy(other, c, s_neg(s_div_exact(w, v)));
            } else {
                S g, a, b;
                s_ext_gcd(v, w, g, a, b);
                apply_col_combine(c, other, a, b, s_div_exact(w, g), s_div_exact(v, g));
            }
        }
    }

    // Returns true when clearing the column reintroduced entries in the row.
    bool clear_pivot_col(int r, int c) {
        bool row_dirty = false;
        while (true) {
            int other = -1;
            for (const auto& [rr, vv] : col_[c].nz)
                if (rr != r && !row_retired_[rr]) {
                    other = rr;
                    break;
                }
            if (other < 0) break;
            const S v = value_at(r, c), w = value_at(other, c);
            if (w % v == S(0)) {
                apply_row_axpy(other, r, s_neg(s_div_exact(w, v)));
            } else {
                S g, a, b;
                s_ext_gcd(v, w, g, a, b);
                apply_row_combine(r, other, a, b, s_div_exact(w, g), s_div_exact(v, g));
            }
        }
        for (int cc : row_cols_[r])
            if (cc != c && !col_retired_[cc]) {
                row_dirty = true;
                break;
            }
        return row_dirty;
    }

    void retire(int r, int c) {
        pivots_.emplace_back(r, c, value_at(r, c));
        col_retired_[c] = true;
        row_retired_[r] = true;
        for (int cc : row_cols_[r]) col_dirty_[cc] = true;
    }

    void assign_col(int c, std::vector<std::pair<int, S>>&& nz) {
        col_dirty_[c] = true;
        for (const auto& [r, v] : col_[c].nz) row_cols_[r].erase(c);
        col_[c].nz = std::move(nz);
        for (const auto& [r, v] : col_[c].nz) row_cols_[r].insert(c);
    }
};

}  // namespace

template <class S>
ColumnReduction<S> column_reduce(const SpColMat<S>& a, bool track_transform,
                                 bool track_inverse) {
    SparseElim<S> elim(a, /*track_u=*/false, /*track_v=*/track_transform, track_inverse);
    elim.run_column_reduction();
    ColumnReduction<S> out;
    out.rows = a.rows;
    out.cols = a.ncols();
    out.reduced = elim.extract_matrix();
    for (const auto& [r, c, v] : elim.pivots()) {
        out.pivot_rows.push_back(r);
        out.pivot_cols.push_back(c);
        out.pivot_values.push_back(v);
    }
    out.kernel_cols = elim.zero_columns();
    if (track_transform) {
        out.V = elim.v();
        if (track_inverse) out.Vinv = elim.vinv();
        out.tracked = true;
    }
    return out;
}

template <class S>
ColumnReduction<S> column_reduce_dense(const DenseMat<S>& input, bool track_transform,
                                       bool track_inverse) {
    const int rows = static_cast<int>(input.rows());
    const int cols = static_cast<int>(input.cols());
    DenseMat<S> a = input;
    DenseMat<S> v, vinv;
    if (track_transform) {
        v.setIdentity(cols, cols);
        if (track_inverse) vinv.setIdentity(cols, cols);
    }
    std::vector<char> col_done(cols, 0), row_done(rows, 0);
    ColumnReduction<S> out;
    out.rows = rows;
    out.cols = cols;

    const auto col_axpy = [&](int dst, int src, const S& t) {
        // col_dst += t * col_src
        for (int r = 0; r < rows; ++r)
            if (a(r, src) != S(0)) a(r, dst) = s_add(a(r, dst), s_mul(t, a(r, src)));
        if (track_transform)
            for (int i = 0; i < cols; ++i)
                if (v(i, src) != S(0)) v(i, dst) = s_add(v(i, dst), s_mul(t, v(i, src)));
        if (track_transform && track_inverse)
            for (int i = 0; i < cols; ++i)
                if (vinv(dst, i) != S(0))
                    vinv(src, i) = s_sub(vinv(src, i), s_mul(t, vinv(dst, i)));
    };
    const auto col_combine = [&](int c, int j, const S& x, const S& y, const S& wg,
                                 const S& vg) {
        for (int r = 0; r < rows; ++r) {
            const S ac = a(r, c), aj = a(r, j);
            a(r, c) = s_add(s_mul(x, ac), s_mul(y, aj));
            a(r, j) = s_sub(s_mul(vg, aj), s_mul(wg, ac));
        }
        if (track_transform)
            for (int i = 0; i < cols; ++i) {
                const S vc = v(i, c), vj = v(i, j);
                v(i, c) = s_add(s_mul(x, vc), s_mul(y, vj));
                v(i, j) = s_sub(s_mul(vg, vj), s_mul(wg, vc));
            }
        if (track_transform && track_inverse)
            for (int i = 0; i < cols; ++i) {
                const S rc = vinv(c, i), rj = vinv(j, i);
                vinv(c, i) = s_add(s_mul(vg, rc), s_mul(wg, rj));
                vinv(j, i) = s_sub(s_mul(x, rj), s_mul(y, rc));
            }
    };

    while (true) {
        int pr = -1, pc = -1;
        S pv = S(0);
        for (int c = 0; c < cols; ++c) {
            if (col_done[c]) continue;
            for (int r = 0; r < rows; ++r) {
                if (row_done[r] || a(r, c) == S(0)) continue;
                if (pc < 0 || s_abs_less(a(r, c), pv)) {
                    pr = r;
                    pc = c;
                    pv = a(r, c);
                }
            }
        }
        if (pc < 0) break;
        // one pass suffices: cleared columns stay zero in the pivot row
        for (int other = 0; other < cols; ++other) {
            if (other == pc || col_done[other] || a(pr, other) == S(0)) continue;
            const S w = a(pr, other);
            const S pivot = a(pr, pc);
            if (w % pivot == S(0)) {
                col_axpy(other, pc, s_neg(s_div_exact(w, pivot)));
            } else {
                S g, x, y;
                s_ext_gcd(pivot, w, g, x, y);
                col_combine(pc, other, x, y, s_div_exact(w, g), s_div_exact(pivot, g));
            }
        }
        out.pivot_rows.push_back(pr);
        out.pivot_cols.push_back(pc);
        out.pivot_values.push_back(a(pr, pc));
        col_done[pc] = 1;
        row_done[pr] = 1;
    }

    out.reduced.rows = rows;
    out.reduced.cols.resize(cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
            if (a(r, c) != S(0)) out.reduced.cols[c].nz.emplace_back(r, a(r, c));
    for (int c = 0; c < cols; ++c)
        if (!col_done[c] && out.reduced.cols[c].nz.empty()) out.kernel_cols.push_back(c);
    if (track_transform) {
        out.V = std::move(v);
        if (track_inverse) out.Vinv = std::move(vinv);
        out.tracked = true;
    }
    return out;
}

template <class S>
std::vector<SpCol<S>> image_basis(const SpColMat<S>& a) {
    SparseElim<S> elim(a, false, false);
    elim.run_column_reduction();
    const SpColMat<S> red = elim.extract_matrix();
    std::vector<SpCol<S>> out;
    for (const auto& [r, c, v] : elim.pivots()) out.push_back(red.cols[c]);
    return out;
}

template <class S>
LeftSmith<S> left_smith(const SpColMat<S>& a) {
    SparseElim<S> elim(a, /*track_u=*/true, /*track_v=*/false);
    elim.run_diagonalization();
    elim.enforce_divisibility();
    elim.normalize_positions();
    LeftSmith<S> out;
    for (const auto& [r, c, v] : elim.pivots()) out.diag.push_back(v);
    out.U = elim.u();
    out.Uinv = elim.uinv();
    return out;
}

template <class S>
LeftSmith<S> left_diagonalize(const SpColMat<S>& a) {
    SparseElim<S> elim(a, /*track_u=*/true, /*track_v=*/false);
    elim.run_diagonalization();
    elim.normalize_positions();
    LeftSmith<S> out;
    for (const auto& [r, c, v] : elim.pivots()) out.diag.push_back(v);
    out.U = elim.u();
    out.Uinv = elim.uinv();
    return out;
}

template <class S>
bool solve_in_image(const ColumnReduction<S>& red, const DenseVec<S>& b, DenseVec<S>& x) {
    // Retired columns form a lower-triangular system in retirement order.
    DenseVec<S> rem = b;
    const int npiv = static_cast<int>(red.pivot_rows.size());
    DenseVec<S> coeff = DenseVec<S>::Zero(npiv);
    for (int i = 0; i < npiv; ++i) {
        const int r = red.pivot_rows[i];
        const int c = red.pivot_cols[i];
        const S& v = red.pivot_values[i];
        if (rem(r) == S(0)) continue;
        if (rem(r) % v != S(0)) return false;
        const S t = s_div_exact(rem(r), v);
        coeff(i) = t;
        for (const auto& [rr, vv] : red.reduced.cols[c].nz)
            rem(rr) = s_sub(rem(rr), s_mul(t, vv));
    }
    for (int i = 0; i < red.rows; ++i)
        if (rem(i) != S(0)) return false;
    x = coeff;
    return true;
}

namespace {

template <class S>
SpColMat<S> dense_to_sparse(const DenseMat<S>& m) {
    SpColMat<S> out;
    out.rows = static_cast<int>(m.rows());
    out.cols.resize(m.cols());
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            if (m(r, c) != S(0)) out.cols[c].nz.emplace_back(r, m(r, c));
    return out;
}

template <class S>
SmithResult smith_impl(const DenseMat<S>& m) {
    SparseElim<S> elim(dense_to_sparse(m), true, true);
    elim.run_diagonalization();
    elim.enforce_divisibility();
    elim.normalize_positions();
    SmithResult out;
    const auto copy_to_big = [](const DenseMat<S>& src, DenseMat<BigInt>& dst) {
        dst.resize(src.rows(), src.cols());
        for (int i = 0; i < src.rows(); ++i)
            for (int j = 0; j < src.cols(); ++j) dst(i, j) = to_big(src(i, j));
    };
    copy_to_big(elim.u(), out.u);
    copy_to_big(elim.v(), out.v);
    out.s = DenseMat<BigInt>::Zero(m.rows(), m.cols());
    int slot = 0;
    for (const auto& [r, c, v] : elim.pivots()) out.s(slot, slot) = to_big(v), ++slot;
    return out;
}

}  // namespace

SmithResult smith_normal_form(const DenseMat<i64>& m) {
    try {
        return smith_impl<i64>(m);
    } catch (const ArithmeticOverflow&) {
        DenseMat<BigInt> big(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) big(i, j) = BigInt(m(i, j));
        return smith_impl<BigInt>(big);
    }
}

SmithResult smith_normal_form_big(const DenseMat<BigInt>& m) { return smith_impl<BigInt>(m); }

DenseMat<BigInt> big_mul(const DenseMat<BigInt>& a, const DenseMat<BigInt>& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("matrix product dimension mismatch");
    DenseMat<BigInt> out = DenseMat<BigInt>::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

bool mat_eq(const DenseMat<BigInt>& a, const DenseMat<BigInt>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

DenseMat<BigInt> big_identity(Eigen::Index n) {
    DenseMat<BigInt> out = DenseMat<BigInt>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

BigInt determinant_big(const DenseMat<BigInt>& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
    const int n = static_cast<int>(m.rows());
    if (n == 0) return BigInt(1);
    // Bareiss fraction-free elimination
    DenseMat<BigInt> a = m;
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return BigInt(0);
            a.row(k).swap(a.row(swap_row));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

// explicit instantiations
template SpColMat<i64> sparse_columns<i64>(const SparseMatI&);
template SpColMat<BigInt> sparse_columns<BigInt>(const SparseMatI&);
template SpColMat<i64> sparse_columns_of_transpose<i64>(const SparseMatI&);
template SpColMat<BigInt> sparse_columns_of_transpose<BigInt>(const SparseMatI&);
template ColumnReduction<i64> column_reduce<i64>(const SpColMat<i64>&, bool, bool);
template ColumnReduction<BigInt> column_reduce<BigInt>(const SpColMat<BigInt>&, bool, bool);
template ColumnReduction<i64> column_reduce_dense<i64>(const DenseMat<i64>&, bool, bool);
template ColumnReduction<BigInt> column_reduce_dense<BigInt>(const DenseMat<BigInt>&, bool, bool);
template std::vector<SpCol<i64>> image_basis<i64>(const SpColMat<i64>&);
template std::vector<SpCol<BigInt>> image_basis<BigInt>(const SpColMat<BigInt>&);
template LeftSmith<i64> left_smith<i64>(const SpColMat<i64>&);
template LeftSmith<BigInt> left_smith<BigInt>(const SpColMat<BigInt>&);
template LeftSmith<i64> left_diagonalize<i64>(const SpColMat<i64>&);
template LeftSmith<BigInt> left_diagonalize<BigInt>(const SpColMat<BigInt>&);
template bool solve_in_image<i64>(const ColumnReduction<i64>&, const DenseVec<i64>&, DenseVec<i64>&);
template bool solve_in_image<BigInt>(const ColumnReduction<BigInt>&, const DenseVec<BigInt>&,
                                     DenseVec<BigInt>&);

}  // namespace kaccoh
