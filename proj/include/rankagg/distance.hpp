#pragma once

#include <cstdint>
#include <vector>

#include "rankagg/ranking.hpp"

namespace rankagg {

// Number of label pairs ordered differently by u and v. O(m log m).
std::int64_t kendall_distance(const Permutation& u, const Permutation& v);

// Pairs ranked in s, in different buckets of s, and ordered by s opposite to u.
// Tied or missing labels contribute nothing. O(m log m).
std::int64_t extended_kendall(const Permutation& u, const Ranking& s);

// Pairs ranked in both a and b on which both express strict and opposite
// preferences. Quadratic; intended for verification.
std::int64_t extended_kendall_rankings(const Ranking& a, const Ranking& b);

// {(x, y) : x in an earlier bucket than y}, sorted.
std::vector<PreferencePair> decompose_pairs(const Ranking& r);
std::vector<PreferencePair> decompose_pairs(const Permutation& p);

// decompose_pairs(u) ∩ decompose_pairs(v), sorted.
std::vector<PreferencePair> concordant_pairs(const Permutation& u, const Permutation& v);

// Strict inversions (i < j, values[i] > values[j]); equal values are not
// inversions. Sorts `values` in place.
std::int64_t count_inversions(std::vector<int>& values);

}  // namespace rankagg
