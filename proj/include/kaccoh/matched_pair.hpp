#pragma once

#include <utility>
#include <vector>

#include "kaccoh/group.hpp"

namespace kaccoh {

/// An exact factorization G = G1*G2 = G2*G1 with trivial intersection,
/// together with the four factorization tables
///   x = p1(x) p2(x)   and   x = q2(x) q1(x).
struct MatchedPair {
    FiniteGroup group;
    SubgroupSpec g1, g2;
    std::vector<int> p1, p2, q1, q2;   // element index -> factor element index

    // position of an element within the sorted subgroup list, -1 outside
    std::vector<int> g1_pos, g2_pos;

    int g1_size() const { return g1.size(); }
    int g2_size() const { return g2.size(); }
    int g1_at(int pos) const { return g1.elements[pos]; }
    int g2_at(int pos) const { return g2.elements[pos]; }
};

MatchedPair build_matched_pair(const FiniteGroup& group,
                               const std::vector<int>& g1_elements,
                               const std::vector<int>& g2_elements);

/// x = g*s with g in G1, s in G2; returns (g, s).
std::pair<int, int> p_factorize(const MatchedPair& mp, int x);

/// x = s*g with s in G2, g in G1; returns (s, g).
std::pair<int, int> q_factorize(const MatchedPair& mp, int x);

/// Unique (right, bottom) with top*right = left*bottom,
/// top, bottom in G2 and left, right in G1.
std::pair<int, int> complete_square(const MatchedPair& mp, int top, int left);

}  // namespace kaccoh
