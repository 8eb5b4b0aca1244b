#include "kaccoh/matched_pair.hpp"

#include <algorithm>
#include <string>

namespace kaccoh {

MatchedPair build_matched_pair(const FiniteGroup& group,
                               const std::vector<int>& g1_elements,
                               const std::vector<int>& g2_elements) {
    if (!is_subgroup(group, g1_elements)) throw NotASubgroup("G1 list is not a subgroup");
    if (!is_subgroup(group, g2_elements)) throw NotASubgroup("G2 list is not a subgroup");

    MatchedPair mp;
    mp.group = group;
    mp.g1.elements = g1_elements;
    mp.g2.elements = g2_elements;
    std::sort(mp.g1.elements.begin(), mp.g1.elements.end());
    std::sort(mp.g2.elements.begin(), mp.g2.elements.end());

    for (int a : mp.g1.elements)
        if (a != group.identity &&
            std::binary_search(mp.g2.elements.begin(), mp.g2.elements.end(), a))
            throw IntersectionNotTrivial("witness element " + std::to_string(a));

    const long long n1 = mp.g1_size(), n2 = mp.g2_size();
    if (n1 * n2 != group.order)
        throw NotExactFactorization("|G1|*|G2| = " + std::to_string(n1 * n2) +
                                    " but |G| = " + std::to_string(group.order));

    mp.p1.assign(group.order, -1);
    mp.p2.assign(group.order, -1);
    mp.q1.assign(group.order, -1);
    mp.q2.assign(group.order, -1);
    for (int g : mp.g1.elements)
        for (int s : mp.g2.elements) {
            const int x = group.mul(g, s);
            if (mp.p1[x] >= 0)
                throw NotExactFactorization("duplicate product g*s at element " +
                                            std::to_string(x));
            mp.p1[x] = g;
            mp.p2[x] = s;
            const int y = group.mul(s, g);
            if (mp.q1[y] >= 0)
                throw NotExactFactorization("duplicate product s*g at element " +
                                            std::to_string(y));
            mp.q1[y] = g;
            mp.q2[y] = s;
        }

    mp.g1_pos.assign(group.order, -1);
    mp.g2_pos.assign(group.order, -1);
    for (int i = 0; i < mp.g1_size(); ++i) mp.g1_pos[mp.g1.elements[i]] = i;
    for (int i = 0; i < mp.g2_size(); ++i) mp.g2_pos[mp.g2.elements[i]] = i;
    return mp;
}

std::pair<int, int> p_factorize(const MatchedPair& mp, int x) {
    if (x < 0 || x >= mp.group.order) throw IndexError("element out of range");
    return {mp.p1[x], mp.p2[x]};
}

std::pair<int, int> q_factorize(const MatchedPair& mp, int x) {
    if (x < 0 || x >= mp.group.order) throw IndexError("element out of range");
    return {mp.q2[x], mp.q1[x]};
}

std::pair<int, int> complete_square(const MatchedPair& mp, int top, int left) {
    // top*right = left*bottom. With x = left^{-1}*top = q2(x) q1(x):
    // bottom = q2(x), right = q1(x)^{-1}.
    const int x = mp.group.mul(mp.group.inv(left), top);
    const int right = mp.group.inv(mp.q1[x]);
    const int bottom = mp.q2[x];
    return {right, bottom};
}

}  // namespace kaccoh
