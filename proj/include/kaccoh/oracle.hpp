#pragma once

#include "kaccoh/homology.hpp"

namespace kaccoh {

// Independent cross-check of the exact engine. Everything here is computed
// by modular Gaussian elimination written separately from the Smith normal
// form pipeline: ranks over Z/p and local invariant-factor valuations over
// Z/p^k, reassembled into group invariants. Rational ranks are certified by
// probing primes coprime to every reported invariant factor.

/// Rank of the matrix over Z/p (p prime, fits in 32 bits).
int oracle_rank_mod_p(const SparseMatI& m, std::uint64_t p);

/// p-adic valuations (capped at `cap`) of the nonzero local invariant
/// factors of m over Z/p^cap, ascending.
std::vector<int> oracle_local_valuations(const SparseMatI& m, std::uint64_t p, int cap);

/// Invariant factors (> 1) of the integer matrix together with its rational
/// rank, reconstructed from modular data only. `torsion_primes` must cover
/// every prime that can divide an invariant factor.
struct OracleMatrixProfile {
    int rank = 0;
    std::vector<i64> invariant_factors;  // chain order, entries > 1
};

OracleMatrixProfile oracle_matrix_profile(const SparseMatI& m,
                                          const std::vector<i64>& torsion_primes);

/// Group invariants of H^degree(cx, coeff) from matrix profiles alone.
/// For finite-group complexes the torsion primes divide the group order.
AbelianGroupInfo oracle_group_info(const CochainComplex& cx, int degree,
                                   const CoefficientModule& coeff, i64 group_order);

/// Prime divisors by trial division (inputs here are tiny).
std::vector<i64> prime_divisors(i64 n);

}  // namespace kaccoh
