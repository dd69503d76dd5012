#pragma once

#include <span>
#include <vector>

#include "rankagg/dataset.hpp"
#include "rankagg/random.hpp"

namespace rankagg {

// Total score per label (index = label, slot 0 unused) over the rankings in
// `subset`. A complete ranking gives m - r points to the label at rank r. A
// ranking over m' < m labels gives (m'+1-r)(m+1)/(m'+1) to ranked labels and
// (m+1)/2 to missing ones. Tied labels take the mean rank of their bucket.
std::vector<double> borda_scores(const Dataset& d, std::span<const int> subset);

// Labels by descending score; equal scores are ordered uniformly at random.
Permutation borda(const Dataset& d, Rng& rng);
Permutation borda(const Dataset& d, std::span<const int> subset, Rng& rng);

// ceil((1 - beta) * n).
int randomized_borda_subset_size(int n, double beta);

// Borda over a fresh uniform sample of randomized_borda_subset_size rankings.
Permutation randomized_borda(const Dataset& d, double beta, Rng& rng);

}  // namespace rankagg
