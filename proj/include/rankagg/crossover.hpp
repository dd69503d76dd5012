#pragma once

#include <vector>

#include "rankagg/random.hpp"
#include "rankagg/ranking.hpp"

namespace rankagg {

// Out-degree of every label in the concordant-pair relation of u and v
// (index = label): the number of labels it precedes in both parents.
std::vector<int> concordant_out_degree(const Permutation& u, const Permutation& v);

// Concordant-pair semantic crossover. Labels are ordered by descending
// concordant out-degree, equal degrees in uniformly random order. Every
// concordant pair of the parents holds in the offspring.
Permutation cpsc(const Permutation& u, const Permutation& v, Rng& rng);

}  // namespace rankagg
