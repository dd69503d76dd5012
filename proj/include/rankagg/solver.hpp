#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "rankagg/dataset.hpp"
#include "rankagg/random.hpp"
#include "rankagg/ranking.hpp"

namespace rankagg {

struct SolverParams {
    int max_gens = 60;        // generations without improvement before HER stops
    int pop_size = 20;        // T
    double beta = 0.2;        // randomized Borda drops this fraction of rankings
    int max_iters = 5000;     // LADS iterations without improvement
    int history_len = 5;      // LADS cost-list length
    double time_limit = 7200.0;  // seconds, whole solve
    std::uint64_t seed = 0;

    // Throws std::invalid_argument.
    void validate() const;
};

struct SolverResult {
    std::string algorithm;
    Permutation best;
    Fitness fitness;
    std::int64_t iterations = 0;
    std::int64_t evaluations = 0;
    std::int64_t generations = 0;
    std::int64_t elapsed_ms = 0;
    std::uint64_t seed = 0;
    SolverParams params;
    std::vector<std::string> warnings;
};

class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() : at_(Clock::time_point::max()) {}
    explicit Deadline(Clock::time_point at) : at_(at) {}

    static Deadline after(double seconds);
    static Deadline never() { return Deadline(); }

    bool expired() const { return at_ != Clock::time_point::max() && Clock::now() >= at_; }

private:
    Clock::time_point at_;
};

enum class Algorithm { Borda, Lads, Her };

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algorithm);

// Runs `algorithm` with an rng seeded from params.seed. LADS starts from the
// Borda solution.
SolverResult solve(Algorithm algorithm, const Dataset& d, const SolverParams& params);

}  // namespace rankagg
