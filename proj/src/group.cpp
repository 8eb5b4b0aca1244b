#include "kaccoh/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace kaccoh {

namespace {

std::string triple_str(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup build_group_from_table(const Eigen::MatrixXi& table) {
    const int n = static_cast<int>(table.rows());
    if (n == 0 || table.cols() != n)
        throw SchemaError("multiplication table must be square and nonempty");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table(a, b) < 0 || table(a, b) >= n)
                throw SchemaError("table entry out of range at " + triple_str(a, b, table(a, b)));

    // rows and columns must be permutations of 0..n-1
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int b = 0; b < n; ++b) {
            if (seen_row[table(a, b)])
                throw NotBijectiveRow("row " + std::to_string(a) + " repeats value " +
                                      std::to_string(table(a, b)));
            seen_row[table(a, b)] = true;
            if (seen_col[table(b, a)])
                throw NotBijectiveRow("column " + std::to_string(a) + " repeats value " +
                                      std::to_string(table(b, a)));
            seen_col[table(b, a)] = true;
        }
    }

    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = table(e, a) == a && table(a, e) == a;
        if (ok) identity = e;
    }
    if (identity < 0) throw NoIdentity("no two-sided identity element");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table(table(a, b), c) != table(a, table(b, c)))
                    throw NotAssociative("first violating triple " + triple_str(a, b, c));

    FiniteGroup g;
    g.order = n;
    g.table = table;
    g.identity = identity;
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table(a, b) == identity && table(b, a) == identity) {
                g.inverse[a] = b;
                break;
            }
        }
        if (g.inverse[a] < 0)
            throw NoIdentity("element " + std::to_string(a) + " has no two-sided inverse");
    }
    return g;
}

FiniteGroup build_group_from_permutations(int degree,
                                          const std::vector<std::vector<int>>& generators,
                                          int order_cap) {
    if (degree <= 0) throw SchemaError("degree must be positive");
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree)
            throw NotAPermutation("generator has wrong length");
        std::vector<bool> seen(degree, false);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[v])
                throw NotAPermutation("generator is not a bijection on 0.." +
                                      std::to_string(degree - 1));
            seen[v] = true;
        }
    }

    using Perm = std::vector<int>;
    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    // BFS from the identity; composition (p*q)(i) = p[q[i]].
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gen : generators) {
            Perm next(degree);
            for (int i = 0; i < degree; ++i) next[i] = elems[head][gen[i]];
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(next);
                if (static_cast<int>(elems.size()) > order_cap)
                    throw OrderLimitExceeded("closure exceeds cap of " +
                                             std::to_string(order_cap));
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    Eigen::MatrixXi table(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Perm prod(degree);
            for (int i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
            table(a, b) = index.at(prod);
        }
    return build_group_from_table(table);
}

SubgroupSpec subgroup_closure(const FiniteGroup& group, const std::vector<int>& seed) {
    for (int s : seed)
        if (s < 0 || s >= group.order)
            throw IndexError("seed element " + std::to_string(s) + " out of range");

    std::set<int> members{group.identity};
    std::vector<int> queue{group.identity};
    for (int s : seed)
        if (members.insert(s).second) queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int a = queue[head];
        if (members.insert(group.inv(a)).second) queue.push_back(group.inv(a));
        for (std::size_t j = 0; j < queue.size(); ++j) {
            for (int prod : {group.mul(a, queue[j]), group.mul(queue[j], a)})
                if (members.insert(prod).second) queue.push_back(prod);
        }
    }

    SubgroupSpec out;
    out.elements.assign(members.begin(), members.end());
    return out;
}

bool is_subgroup(const FiniteGroup& group, const std::vector<int>& elements) {
    std::set<int> set(elements.begin(), elements.end());
    if (set.size() != elements.size()) return false;
    if (!set.count(group.identity)) return false;
    for (int a : set) {
        if (a < 0 || a >= group.order) return false;
        if (!set.count(group.inv(a))) return false;
        for (int b : set)
            if (!set.count(group.mul(a, b))) return false;
    }
    return true;
}

}  // namespace kaccoh
