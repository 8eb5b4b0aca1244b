#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kaccoh/complexes.hpp"
#include "kaccoh/torus.hpp"

namespace kaccoh {

enum class CoeffKind { Integers, IntegersMod, Torus };

struct CoefficientModule {
    CoeffKind kind = CoeffKind::Integers;
    i64 modulus = 0;  // for IntegersMod, >= 2

    static CoefficientModule integers() { return {CoeffKind::Integers, 0}; }
    static CoefficientModule integers_mod(i64 m) {
        if (m < 2) throw SchemaError("modulus must be >= 2");
        return {CoeffKind::IntegersMod, m};
    }
    static CoefficientModule torus() { return {CoeffKind::Torus, 0}; }

    std::string str() const;
};

CoefficientModule parse_coefficient(const std::string& text);  // "Z", "T", "Zm:6"

/// Canonical form of a finitely generated (or torus x finite) abelian group:
/// free rank, invariant factor chain d_1 | d_2 | ... (each >= 2), and the
/// number of circle factors (nonzero only for Torus-coefficient results).
struct AbelianGroupInfo {
    i64 free_rank = 0;
    std::vector<i64> torsion;
    i64 torus_rank = 0;

    bool operator==(const AbelianGroupInfo& o) const {
        return free_rank == o.free_rank && torus_rank == o.torus_rank && torsion == o.torsion;
    }
    bool operator!=(const AbelianGroupInfo& o) const { return !(*this == o); }
    bool is_trivial() const { return free_rank == 0 && torus_rank == 0 && torsion.empty(); }
    std::string str() const;
};

/// Computed cohomology of one degree together with the exact coordinate
/// machinery: class coordinates, generator cochains, representatives.
///
/// For Torus coefficients everything lives on the transposed (chain-side)
/// complex at the same index, realizing H^n(C, T) = Hom(H_n(chain), T);
/// generators below are then homology generators and the dual pairing is
/// by dot products. For IntegersMod the ambient space is the mapping cone
/// of multiplication by m, pairs (x, y) with y the degree-n cochain.
struct CohomologyData {
    ComplexKind kind = ComplexKind::BarG;
    int degree = 0;
    CoefficientModule coeff;
    AbelianGroupInfo info;

    int R = 0;                   // ambient coordinate count
    SparseMatI cocycle_check;    // z is a cocycle iff cocycle_check * z = 0

    // mod-m cone layout: ambient = C^{n+1} (+) C^n, y block second
    std::int64_t x_len = 0, y_len = 0;
    SparseMatI lift_dx;          // d_n, for embedding y -> (d y / m, y)

    // quotient pipeline (see homology.cpp)
    DenseMat<i64> U, Uinv;
    std::vector<i64> dvals;
    std::vector<int> proj_rows;
    std::vector<int> I2;
    ColumnReduction<i64> Lred;
    DenseMat<i64> Lift;          // R x rho, columns lift the projected lattice
    DenseMat<i64> UX, UXinv;
    std::vector<i64> xorders;    // order per adapted position (0 = free)
    std::vector<int> exposed;    // adapted positions: torsion chain, then free

    // unimodular complement data for Torus representatives
    bool have_complement = false;
    DenseMat<i64> V2, V2inv;
    std::vector<int> kernel_cols;

    int num_generators() const { return static_cast<int>(exposed.size()); }
    i64 generator_order(int i) const { return xorders[exposed[i]]; }  // 0 = free/torus
};

/// Kernel-mod-image at `degree`; requires the complex to carry the degree
/// and its outgoing coboundary (degrees below min_degree count as zero).
CohomologyData compute_cohomology(const CochainComplex& cx, int degree,
                                  const CoefficientModule& coeff);

/// Coordinates of the class of an integer cocycle (Integers), or of a
/// mod-m cocycle given by an integer vector (IntegersMod), with respect to
/// the exposed generators; torsion coordinates are reduced mod the order.
std::vector<BigInt> class_coords(const CohomologyData& data, const DenseVec<BigInt>& cocycle);

/// The i-th exposed generator as an integer vector on the complex basis
/// (for Torus data: a chain-side homology generator).
DenseVec<i64> generator_vector(const CohomologyData& data, int i);

/// Integer cocycle with the requested class coordinates (Integers /
/// IntegersMod; for the latter entries are residues mod m).
DenseVec<BigInt> cocycle_representative(const CohomologyData& data,
                                        const std::vector<BigInt>& coords);

/// Torus-coefficient cochain (exact rationals mod 1) taking the value
/// `targets[i]` on exposed generator i and vanishing on a complement;
/// torsion targets must be multiples of 1/order.
std::vector<TorusValue> torus_representative(const CohomologyData& data,
                                             const std::vector<TorusValue>& targets);

/// Values of a Torus cochain on the exposed generators (its class), after
/// verifying the cocycle condition; null when not a cocycle.
std::optional<std::vector<TorusValue>> torus_class_values(const CohomologyData& data,
                                                          const std::vector<TorusValue>& cochain);

/// A map on cohomology induced by a (possibly sign-twisted) cochain map.
/// For Integers / IntegersMod, `matrix` columns express the images of the
/// source generators in target generator coordinates. For Torus, `matrix`
/// is the Pontryagin-dual map on homology presentations: columns express
/// the images of the TARGET generators in SOURCE generator coordinates.
struct InducedMap {
    DenseMat<BigInt> matrix;
    bool dual = false;
    int sign = 1;  // chain law held with d_target f = sign * f d_source
};

InducedMap induced_map(const std::map<int, SparseMatI>& f, const CochainComplex& source,
                       const CochainComplex& target, const CohomologyData& source_data,
                       const CohomologyData& target_data);

// ---- presented abelian groups and exactness -------------------------------

/// Z^n modulo the relations order_i * e_i (order 0 = free generator).
struct PresentedGroup {
    std::vector<BigInt> orders;

    int ngens() const { return static_cast<int>(orders.size()); }
    static PresentedGroup from_info(const AbelianGroupInfo& info);
};

struct ExactnessNode {
    bool pass = false;
    std::string witness;  // empty on pass
};

struct ExactnessReport {
    std::vector<ExactnessNode> nodes;  // one per interior node
    bool all_pass = true;
};

/// Verifies image = kernel at every interior node of
///   G_0 -> G_1 -> ... -> G_k   (maps[i] : G_i -> G_{i+1})
/// by lattice containment plus index-one equality. A leading or trailing
/// zero group expresses "0 ->" / "-> 0" boundary exactness.
ExactnessReport check_exact(const std::vector<PresentedGroup>& groups,
                            const std::vector<DenseMat<BigInt>>& maps);

}  // namespace kaccoh
