#include "rankagg/her.hpp"

#include "rankagg/crossover.hpp"
#include "rankagg/lads.hpp"
#include "rankagg/population.hpp"

namespace rankagg {

SolverResult her(const Dataset& d, const SolverParams& params, Rng& rng, const HerOptions& options) {
    params.validate();
    const auto clock_start = Deadline::Clock::now();
    const auto deadline = Deadline::after(params.time_limit);

    SolverResult result;
    result.algorithm = "her";
    result.seed = params.seed;
    result.params = params;

    SearchCounters counters;
    Population pop = population_init(d, params, rng, deadline, counters, result.warnings);
    if (pop.size() == 0) {
        // Out of time before the first member was built.
        Permutation fallback = Permutation::identity(d.m());
        result.fitness = fitness(fallback, d);
        result.best = std::move(fallback);
        ++counters.evaluations;
    } else {
        const Member& seed_best = pop[pop.best_index()];
        result.best = seed_best.perm;
        result.fitness = Fitness{seed_best.fitness, d.n()};
    }

    const bool exhausted = pop.size() == permutation_count(d.m(), pop.size() + 1);
    if (pop.size() < 2 || exhausted) {
        if (exhausted) result.warnings.push_back("population covers the whole search space; no generations run");
    } else {
        int idle = 0;
        while (!deadline.expired()) {
            const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(pop.size())));
            int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(pop.size() - 1)));
            if (j >= i) ++j;

            const Permutation child = cpsc(pop[i].perm, pop[j].perm, rng);
            const SolverResult refined = lads(child, d, params, rng, deadline);
            counters.iterations += refined.iterations;
            counters.evaluations += refined.evaluations;
            ++result.generations;

            if (refined.fitness.sum < result.fitness.sum) {
                result.best = refined.best;
                result.fitness = refined.fitness;
                idle = 0;
            } else {
                ++idle;
            }
            if (idle > params.max_gens) {
                if (options.observer)
                    options.observer(
                        GenerationEvent{result.generations, refined.fitness.sum, result.fitness.sum, idle, false});
                break;
            }
            const bool inserted = pop.update(refined.best, refined.fitness.sum);
            if (options.observer)
                options.observer(
                    GenerationEvent{result.generations, refined.fitness.sum, result.fitness.sum, idle, inserted});
        }
    }

    result.iterations = counters.iterations;
    result.evaluations = counters.evaluations;
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Deadline::Clock::now() - clock_start).count();
    return result;
}

}  // namespace rankagg
