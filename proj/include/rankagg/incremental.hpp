#pragma once

#include <cstdint>

#include "rankagg/dataset.hpp"
#include "rankagg/ranking.hpp"

namespace rankagg {

// Change in extended_kendall(p, s) when labels a and b exchange positions in
// p. Only the pair (a, b) and labels ranked strictly between a and b in p can
// change; the scan covers that gap or the bucket range of a and b in s,
// whichever is smaller. Throws RankingError if a == b.
std::int64_t swap_delta(const Permutation& p, Label a, Label b, const Ranking& s);

// Sum of swap_delta over the dataset. O(n * m).
std::int64_t fitness_delta(const Permutation& p, Label a, Label b, const Dataset& d);

}  // namespace rankagg
