#include "rankagg/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "rankagg/borda.hpp"
#include "rankagg/her.hpp"
#include "rankagg/lads.hpp"

namespace rankagg {

void SolverParams::validate() const {
    if (max_gens < 0) throw std::invalid_argument("max_gens must be non-negative");
    if (pop_size < 2) throw std::invalid_argument("pop_size must be at least 2");
    if (!(beta > 0.0 && beta < 0.5)) throw std::invalid_argument("beta must be in (0, 0.5)");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be positive");
    if (history_len < 1) throw std::invalid_argument("history_len must be positive");
    if (!(time_limit > 0.0) || std::isnan(time_limit)) throw std::invalid_argument("time_limit must be positive");
}

Deadline Deadline::after(double seconds) {
    if (!std::isfinite(seconds) || seconds > 1e9) return never();
    return Deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds)));
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "borda") return Algorithm::Borda;
    if (name == "lads") return Algorithm::Lads;
    if (name == "her") return Algorithm::Her;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "' (expected borda, lads, her)");
}

std::string_view algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Borda: return "borda";
        case Algorithm::Lads: return "lads";
        case Algorithm::Her: return "her";
    }
    return "unknown";
}

SolverResult solve(Algorithm algorithm, const Dataset& d, const SolverParams& params) {
    params.validate();
    Rng rng(params.seed);
    const auto clock_start = Deadline::Clock::now();
    switch (algorithm) {
        case Algorithm::Her: return her(d, params, rng);
        case Algorithm::Lads: {
            const auto deadline = Deadline::after(params.time_limit);
            const Permutation start = borda(d, rng);
            auto result = lads(start, d, params, rng, deadline);
            result.elapsed_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Deadline::Clock::now() - clock_start).count();
            return result;
        }
        case Algorithm::Borda: break;
    }
    SolverResult result;
    result.algorithm = "borda";
    result.seed = params.seed;
    result.params = params;
    result.best = borda(d, rng);
    result.fitness = fitness(result.best, d);
    result.evaluations = 1;
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Deadline::Clock::now() - clock_start).count();
    return result;
}

}  // namespace rankagg
