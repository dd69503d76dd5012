#pragma once

#include <cstdint>
#include <functional>

#include "rankagg/dataset.hpp"
#include "rankagg/random.hpp"
#include "rankagg/solver.hpp"

namespace rankagg {

struct GenerationEvent {
    std::int64_t generation;  // 1-based
    std::int64_t child_fitness;
    std::int64_t best_fitness;
    int idle_generations;
    bool child_inserted;
};

struct HerOptions {
    std::function<void(const GenerationEvent&)> observer;
};

// Hybrid evolutionary ranking: a LADS-refined randomized Borda population
// bred by CPSC; each child is refined by LADS and competes with the worst
// member. Stops once the best solution has not improved for more than
// params.max_gens generations or when params.time_limit (which includes
// initialization) runs out.
SolverResult her(const Dataset& d, const SolverParams& params, Rng& rng, const HerOptions& options = {});

}  // namespace rankagg
