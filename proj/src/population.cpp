#include "rankagg/population.hpp"

#include <algorithm>
#include <numeric>

#include "rankagg/borda.hpp"
#include "rankagg/lads.hpp"

namespace rankagg {

bool Population::contains(const Permutation& p) const {
    return std::any_of(members_.begin(), members_.end(), [&](const Member& x) { return x.perm == p; });
}

bool Population::insert(Permutation p, std::int64_t fitness) {
    if (contains(p)) return false;
    members_.push_back(Member{std::move(p), fitness, next_birth_++});
    return true;
}

int Population::best_index() const {
    int best = 0;
    for (int i = 1; i < size(); ++i) {
        const auto& x = members_[static_cast<std::size_t>(i)];
        const auto& y = members_[static_cast<std::size_t>(best)];
        if (x.fitness < y.fitness || (x.fitness == y.fitness && x.birth < y.birth)) best = i;
    }
    return best;
}

int Population::worst_index() const {
    int worst = 0;
    for (int i = 1; i < size(); ++i) {
        const auto& x = members_[static_cast<std::size_t>(i)];
        const auto& y = members_[static_cast<std::size_t>(worst)];
        if (x.fitness > y.fitness || (x.fitness == y.fitness && x.birth < y.birth)) worst = i;
    }
    return worst;
}

bool Population::update(const Permutation& child, std::int64_t fitness) {
    if (members_.empty()) return false;
    const int worst = worst_index();
    if (fitness >= members_[static_cast<std::size_t>(worst)].fitness || contains(child)) return false;
    members_[static_cast<std::size_t>(worst)] = Member{child, fitness, next_birth_++};
    return true;
}

std::int64_t permutation_count(int m, std::int64_t cap) {
    std::int64_t count = 1;
    for (int k = 2; k <= m; ++k) {
        if (count > cap / k) return cap;
        count *= k;
    }
    return std::min(count, cap);
}

namespace {

Permutation random_permutation(int m, Rng& rng) {
    std::vector<Label> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(std::span<Label>(order));
    return Permutation(std::move(order));
}

}  // namespace

Population population_init(const Dataset& d, const SolverParams& params, Rng& rng, Deadline deadline,
                           SearchCounters& counters, std::vector<std::string>& warnings) {
    params.validate();
    const int target = static_cast<int>(permutation_count(d.m(), params.pop_size));
    if (target < params.pop_size)
        warnings.push_back("population capped at " + std::to_string(target) + ": only " + std::to_string(target) +
                           " distinct permutations of " + std::to_string(d.m()) + " labels exist");

    Population pop;
    auto improve_and_insert = [&](const Permutation& start) {
        const auto r = lads(start, d, params, rng, deadline);
        counters.iterations += r.iterations;
        counters.evaluations += r.evaluations;
        pop.insert(r.best, r.fitness.sum);
    };

    const int attempts = 10 * params.pop_size;
    for (int i = 0; i < attempts && pop.size() < target && !deadline.expired(); ++i)
        improve_and_insert(randomized_borda(d, params.beta, rng));

    if (pop.size() < target)
        warnings.push_back("randomized borda yielded " + std::to_string(pop.size()) +
                           " distinct members; filling with random starts");
    for (int i = 0; i < attempts && pop.size() < target && !deadline.expired(); ++i)
        improve_and_insert(random_permutation(d.m(), rng));

    // Terminates with probability 1 because target <= m!.
    while (pop.size() < target && !deadline.expired()) {
        auto p = random_permutation(d.m(), rng);
        const auto f = fitness_sum(p, d);
        ++counters.evaluations;
        pop.insert(std::move(p), f);
    }
    return pop;
}

Population population_init(const Dataset& d, const SolverParams& params, Rng& rng) {
    SearchCounters counters;
    std::vector<std::string> warnings;
    return population_init(d, params, rng, Deadline::after(params.time_limit), counters, warnings);
}

}  // namespace rankagg
