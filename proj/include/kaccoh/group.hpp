#pragma once

#include <Eigen/Core>
#include <vector>

#include "kaccoh/errors.hpp"

namespace kaccoh {

/// A finite group given by its full multiplication table.
/// Elements are the dense indices 0..order-1; all higher layers speak
/// indices only.
struct FiniteGroup {
    int order = 0;
    Eigen::MatrixXi table;       // table(a,b) = a*b
    int identity = 0;
    std::vector<int> inverse;

    int mul(int a, int b) const { return table(a, b); }
    int inv(int a) const { return inverse[a]; }
};

/// A subgroup of the ambient group, kept as a sorted element list.
struct SubgroupSpec {
    std::vector<int> elements;  // sorted ascending, contains the identity

    int size() const { return static_cast<int>(elements.size()); }
};

/// Validates the table (square, rows/columns bijective, identity exists,
/// associative) and derives identity and inverse tables.
FiniteGroup build_group_from_table(const Eigen::MatrixXi& table);

/// Closure of permutation generators under composition. Element 0 is the
/// identity permutation; the ordering is BFS discovery order from the
/// identity, so tables are stable given the generator order.
FiniteGroup build_group_from_permutations(int degree,
                                          const std::vector<std::vector<int>>& generators,
                                          int order_cap = 10000);

/// Smallest subgroup of `group` containing `seed`.
SubgroupSpec subgroup_closure(const FiniteGroup& group, const std::vector<int>& seed);

bool is_subgroup(const FiniteGroup& group, const std::vector<int>& elements);

}  // namespace kaccoh
