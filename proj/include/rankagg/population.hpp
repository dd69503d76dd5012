#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rankagg/dataset.hpp"
#include "rankagg/random.hpp"
#include "rankagg/solver.hpp"

namespace rankagg {

struct Member {
    Permutation perm;
    std::int64_t fitness = 0;
    std::uint64_t birth = 0;  // insertion order; lower is older
};

// Pairwise-distinct permutations with cached fitness sums.
class Population {
public:
    int size() const { return static_cast<int>(members_.size()); }
    std::span<const Member> members() const { return members_; }
    const Member& operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }

    bool contains(const Permutation& p) const;

    // Adds p if it is not already present.
    bool insert(Permutation p, std::int64_t fitness);

    // Replaces the worst member (oldest among equally bad ones) when `child`
    // is strictly better and differs from every member. Returns true if the
    // population changed.
    bool update(const Permutation& child, std::int64_t fitness);

    // Index of the member with the lowest fitness (oldest on ties).
    int best_index() const;
    int worst_index() const;

private:
    std::vector<Member> members_;
    std::uint64_t next_birth_ = 0;
};

struct SearchCounters {
    std::int64_t iterations = 0;
    std::int64_t evaluations = 0;
};

// m!, saturating at `cap`.
std::int64_t permutation_count(int m, std::int64_t cap);

// Randomized Borda candidates improved by LADS and kept when distinct, for at
// most 10*T attempts; then LADS-improved uniform random permutations; then,
// if LADS keeps converging onto existing members, raw random permutations.
// The target size is min(T, m!); a smaller target is reported in `warnings`.
Population population_init(const Dataset& d, const SolverParams& params, Rng& rng, Deadline deadline,
                           SearchCounters& counters, std::vector<std::string>& warnings);

Population population_init(const Dataset& d, const SolverParams& params, Rng& rng);

}  // namespace rankagg
