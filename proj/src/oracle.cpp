#include "kaccoh/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace kaccoh {

namespace {

using u64 = std::uint64_t;

u64 pow_u64(u64 base, int exp) {
    u64 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

u64 inverse_mod(u64 a, u64 mod) {
    // extended Euclid; a must be a unit
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(mod), newr = static_cast<long long>(a % mod);
    while (newr != 0) {
        const long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw ArithmeticOverflow("element is not a unit in the local ring");
    if (t < 0) t += static_cast<long long>(mod);
    return static_cast<u64>(t);
}

int valuation_of(u64 value, u64 p) {
    int v = 0;
    while (value % p == 0) {
        value /= p;
        ++v;
    }
    return v;
}

// Plain no-transform elimination over Z/p^cap with global minimal-valuation
// pivoting and Markowitz-style fill control; deliberately independent of the
// exact SNF engine.
struct LocalElim {
    u64 modulus, p;
    int cap;
    std::vector<std::map<int, u64>> cols;  // row -> value, nonzero
    std::vector<char> col_done, row_done;
    std::vector<int> row_live;             // live-entry count per row
    std::vector<char> dirty;
    std::vector<std::pair<int, int>> best;  // per column: (valuation, row), (-1,-1) if empty

    LocalElim(const SparseMatI& m, u64 prime, int k)
        : modulus(pow_u64(prime, k)), p(prime), cap(k) {
        cols.resize(m.cols());
        col_done.assign(m.cols(), 0);
        row_done.assign(m.rows(), 0);
        row_live.assign(m.rows(), 0);
        dirty.assign(m.cols(), 1);
        best.assign(m.cols(), {-1, -1});
        for (int c = 0; c < m.outerSize(); ++c)
            for (SparseMatI::InnerIterator it(m, c); it; ++it) {
                const long long raw = it.value() % static_cast<long long>(modulus);
                const u64 val = static_cast<u64>(raw < 0 ? raw + static_cast<long long>(modulus)
                                                         : raw);
                if (val != 0) {
                    cols[c][static_cast<int>(it.row())] = val;
                    ++row_live[it.row()];
                }
            }
    }

    void refresh(int c) {
        best[c] = {-1, -1};
        int vbest = cap + 1;
        for (const auto& [r, val] : cols[c]) {
            if (row_done[r]) continue;
            const int v = valuation_of(val, p);
            if (v < vbest) {
                vbest = v;
                best[c] = {v, r};
                if (v == 0) break;
            }
        }
        dirty[c] = 0;
    }

    std::vector<int> run() {
        std::vector<int> valuations;
        while (true) {
            int pr = -1, pc = -1, pv = cap + 1;
            long long pfill = std::numeric_limits<long long>::max();
            for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
                if (col_done[c]) continue;
                if (dirty[c]) refresh(c);
                const auto [v, r] = best[c];
                if (r < 0) continue;
                const long long fill = static_cast<long long>(cols[c].size() - 1) *
                                       static_cast<long long>(row_live[r] - 1);
                if (v < pv || (v == pv && fill < pfill)) {
                    pv = v;
                    pr = r;
                    pc = c;
                    pfill = fill;
                    if (pv == 0 && pfill == 0) break;
                }
            }
            if (pc < 0) break;
            eliminate(pr, pc, pv);
            valuations.push_back(pv);
        }
        std::sort(valuations.begin(), valuations.end());
        return valuations;
    }

    // Clearing the pivot row by column operations is enough: the global
    // minimal-valuation rule means every remaining entry of the pivot column
    // has valuation >= pv, so the row operations that would clear it only
    // use the (already cleared) pivot row and never touch other columns.
    void eliminate(int pr, int pc, int pv) {
        const u64 pivot = cols[pc].at(pr);
        const u64 unit = pivot / pow_u64(p, pv);
        const u64 unit_inv = inverse_mod(unit, modulus);
        for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
            if (c == pc || col_done[c]) continue;
            auto it = cols[c].find(pr);
            if (it == cols[c].end()) continue;
            const u64 w = it->second;
            const u64 t = (w / pow_u64(p, pv)) % modulus * unit_inv % modulus;
            axpy_col(c, pc, modulus - t % modulus);
        }
        col_done[pc] = 1;
        row_done[pr] = 1;
        for (const auto& [r, val] : cols[pc])
            if (!row_done[r]) --row_live[r];
        for (int c = 0; c < static_cast<int>(cols.size()); ++c)
            if (!col_done[c] && cols[c].count(pr)) dirty[c] = 1;
    }

    // col_dst += t * col_src
    void axpy_col(int dst, int src, u64 t) {
        if (t % modulus == 0) return;
        for (const auto& [r, val] : cols[src]) {
            auto [it, inserted] = cols[dst].emplace(r, 0);
            it->second = (it->second + val % modulus * (t % modulus)) % modulus;
            if (inserted && !row_done[r]) ++row_live[r];
            if (it->second == 0) {
                cols[dst].erase(it);
                if (!row_done[r]) --row_live[r];
            }
        }
        dirty[dst] = 1;
    }
};

std::vector<i64> chain_from_factors(std::vector<i64> factors) {
    std::map<i64, std::vector<int>> by_prime;
    for (i64 f : factors)
        for (i64 p : prime_divisors(f)) {
            int v = 0;
            while (f % p == 0) {
                f /= p;
                ++v;
            }
            by_prime[p].push_back(v);
        }
    std::size_t chain_len = 0;
    for (auto& [p, vals] : by_prime) {
        std::sort(vals.rbegin(), vals.rend());
        chain_len = std::max(chain_len, vals.size());
    }
    std::vector<i64> chain(chain_len, 1);
    for (auto& [p, vals] : by_prime)
        for (std::size_t i = 0; i < vals.size(); ++i) {
            i64 f = 1;
            for (int k = 0; k < vals[i]; ++k) f *= p;
            chain[i] *= f;  // chain[0] = largest
        }
    std::sort(chain.begin(), chain.end());
    chain.erase(std::remove(chain.begin(), chain.end(), 1), chain.end());
    return chain;
}

}  // namespace

std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> out;
    n = std::abs(n);
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// rank and invariant factors are transpose-invariant; eliminating on the
// short side keeps the per-pivot column scans cheap
SparseMatI short_side(const SparseMatI& m) {
    if (m.cols() <= m.rows()) return m;
    SparseMatI t = m.transpose();
    return t;
}

}  // namespace

int oracle_rank_mod_p(const SparseMatI& m, std::uint64_t p) {
    LocalElim elim(short_side(m), p, 1);
    return static_cast<int>(elim.run().size());
}

std::vector<int> oracle_local_valuations(const SparseMatI& m, std::uint64_t p, int cap) {
    LocalElim elim(short_side(m), p, cap);
    return elim.run();
}

OracleMatrixProfile oracle_matrix_profile(const SparseMatI& m,
                                          const std::vector<i64>& torsion_primes) {
    OracleMatrixProfile out;
    if (m.rows() == 0 || m.cols() == 0) return out;

    // rational rank: the maximum of ranks over several primes; the large
    // probes are coprime to any possible invariant factor, which makes the
    // maximum exact
    int rank = 0;
    for (u64 probe : {u64(1000003), u64(998244353)})
        rank = std::max(rank, oracle_rank_mod_p(m, probe));
    for (i64 p : torsion_primes) rank = std::max(rank, oracle_rank_mod_p(m, static_cast<u64>(p)));
    out.rank = rank;

    std::vector<i64> factors;
    std::map<i64, std::vector<int>> valuations;
    for (i64 p : torsion_primes) {
        // an invariant factor divisible by p^cap is invisible over Z/p^cap
        // (its pivot vanishes), so grow the cap until every rational-rank
        // pivot is accounted for
        int cap = 2;
        std::vector<int> vals = oracle_local_valuations(m, static_cast<u64>(p), cap);
        while (static_cast<int>(vals.size()) < rank &&
               pow_u64(static_cast<u64>(p), cap + 1) < (1u << 30)) {
            ++cap;
            vals = oracle_local_valuations(m, static_cast<u64>(p), cap);
        }
        for (int v : vals)
            if (v >= 1) {
                i64 f = 1;
                for (int k = 0; k < v; ++k) f *= p;
                factors.push_back(f);
            }
    }
    out.invariant_factors = chain_from_factors(factors);
    return out;
}

AbelianGroupInfo oracle_group_info(const CochainComplex& cx, int degree,
                                   const CoefficientModule& coeff, i64 group_order) {
    if (degree < cx.min_degree || degree >= cx.max_degree)
        throw DegreeUnavailable("oracle needs built degrees around " + std::to_string(degree));
    const std::vector<i64> primes = prime_divisors(group_order);
    const SparseMatI empty;
    const SparseMatI& d_n = cx.matrix_at(degree);
    const SparseMatI& d_prev = degree - 1 >= cx.min_degree ? cx.matrix_at(degree - 1) : empty;
    const std::int64_t rank_n = cx.rank_at(degree);

    const OracleMatrixProfile prof_n = oracle_matrix_profile(d_n, primes);
    const OracleMatrixProfile prof_prev = oracle_matrix_profile(d_prev, primes);

    AbelianGroupInfo info;
    switch (coeff.kind) {
        case CoeffKind::Integers:
            // torsion(H^n) = invariant factors of d_{n-1} (the kernel of d_n
            // is saturated), free rank = dim ker - rank im
            info.free_rank = rank_n - prof_n.rank - prof_prev.rank;
            info.torsion = prof_prev.invariant_factors;
            break;
        case CoeffKind::Torus:
            info.torus_rank = rank_n - prof_n.rank - prof_prev.rank;
            info.torsion = prof_n.invariant_factors;
            break;
        case CoeffKind::IntegersMod: {
            // universal coefficients: H^n (x) Z/m plus Tor(H^{n+1}, Z/m)
            const i64 m = coeff.modulus;
            std::vector<i64> factors;
            const i64 free_n = rank_n - prof_n.rank - prof_prev.rank;
            for (i64 i = 0; i < free_n; ++i) factors.push_back(m);
            for (i64 d : prof_prev.invariant_factors) factors.push_back(std::gcd(d, m));
            for (i64 d : prof_n.invariant_factors) factors.push_back(std::gcd(d, m));
            factors.erase(std::remove(factors.begin(), factors.end(), 1), factors.end());
            info.torsion = chain_from_factors(factors);
            break;
        }
    }
    return info;
}

}  // namespace kaccoh
