#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rankagg/dataset.hpp"
#include "rankagg/random.hpp"
#include "rankagg/solver.hpp"

namespace rankagg {

// Late-acceptance history: L_h past costs with their maximum and the
// multiplicity of that maximum kept exact after every update.
class CostList {
public:
    CostList(int length, std::int64_t initial);

    std::int64_t max() const { return max_; }
    int max_count() const { return count_; }
    std::span<const std::int64_t> costs() const { return costs_; }
    int length() const { return static_cast<int>(costs_.size()); }

    // Sideways moves always pass; otherwise the candidate must beat the
    // history maximum.
    bool accepts(std::int64_t candidate, std::int64_t current) const {
        return candidate == current || candidate < max_;
    }

    // Refreshes slot `slot` (iteration mod L_h) after an iteration that left
    // the search at cost `current`, having started it at `previous`. The slot
    // is raised to `current` if lower, or lowered to it when `current` is also
    // an improvement on `previous`.
    void update(int slot, std::int64_t current, std::int64_t previous);

    // Recomputes max and count from scratch and compares.
    bool invariant_holds() const;

private:
    void recompute();

    std::vector<std::int64_t> costs_;
    std::int64_t max_;
    int count_;
};

enum class Evaluation {
    Incremental,
    Recompute,  // full re-evaluation of every neighbour; baseline for benchmarks
};

struct LadsStep {
    std::int64_t iteration;
    std::int64_t candidate;
    std::int64_t current;  // after the acceptance decision
    std::int64_t best;
    bool accepted;
};

struct LadsOptions {
    Evaluation evaluation = Evaluation::Incremental;
    std::function<void(const LadsStep&, const CostList&)> observer;
};

// Late acceptance swap search from `start`. Stops after params.max_iters
// consecutive iterations without a new best, or when `deadline` passes.
SolverResult lads(const Permutation& start, const Dataset& d, const SolverParams& params, Rng& rng,
                  Deadline deadline, const LadsOptions& options = {});

// Same, with the deadline taken from params.time_limit.
SolverResult lads(const Permutation& start, const Dataset& d, const SolverParams& params, Rng& rng);

}  // namespace rankagg
