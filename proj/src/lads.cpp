#include "rankagg/lads.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "rankagg/incremental.hpp"

namespace rankagg {

CostList::CostList(int length, std::int64_t initial)
    : costs_(static_cast<std::size_t>(length), initial), max_(initial), count_(length) {
    if (length < 1) throw std::invalid_argument("cost list length must be positive");
}

void CostList::recompute() {
    max_ = *std::max_element(costs_.begin(), costs_.end());
    count_ = static_cast<int>(std::count(costs_.begin(), costs_.end(), max_));
}

void CostList::update(int slot, std::int64_t current, std::int64_t previous) {
    auto& value = costs_[static_cast<std::size_t>(slot)];
    if (current > value) {
        value = current;
        if (current > max_) {
            max_ = current;
            count_ = 1;
        } else if (current == max_) {
            ++count_;
        }
    } else if (current < value && current < previous) {
        if (value == max_) --count_;
        value = current;
        if (count_ == 0) recompute();
    }
    assert(invariant_holds());
}

bool CostList::invariant_holds() const {
    const auto true_max = *std::max_element(costs_.begin(), costs_.end());
    return true_max == max_ && std::count(costs_.begin(), costs_.end(), max_) == count_;
}

SolverResult lads(const Permutation& start, const Dataset& d, const SolverParams& params, Rng& rng,
                  Deadline deadline, const LadsOptions& options) {
    params.validate();
    if (start.size() != d.m()) throw RankingError("start permutation does not match dataset universe");
    const auto clock_start = Deadline::Clock::now();

    SolverResult result;
    result.algorithm = "lads";
    result.seed = params.seed;
    result.params = params;

    const int m = d.m();
    Permutation current = start;
    std::int64_t f = fitness_sum(current, d);
    Permutation best = current;
    std::int64_t f_best = f;
    std::int64_t evaluations = 1;
    std::int64_t iters = 0;

    if (m == 2) {
        // The whole search space is {start, swapped start}.
        Permutation other = current;
        other.swap_labels(1, 2);
        const std::int64_t f_other = fitness_sum(other, d);
        ++evaluations;
        iters = 1;
        if (f_other < f_best) {
            best = std::move(other);
            f_best = f_other;
        }
    } else {
        CostList history(params.history_len, f);
        std::int64_t idle = 0;
        Permutation scratch = current;
        while (idle < params.max_iters) {
            if ((iters & 127) == 0 && deadline.expired()) break;
            const std::int64_t f_prev = f;

            const Label a = static_cast<Label>(1 + rng.below(static_cast<std::uint64_t>(m)));
            Label b = static_cast<Label>(1 + rng.below(static_cast<std::uint64_t>(m - 1)));
            if (b >= a) ++b;

            std::int64_t f_candidate;
            if (options.evaluation == Evaluation::Incremental) {
                f_candidate = f + fitness_delta(current, a, b, d);
            } else {
                scratch = current;
                scratch.swap_labels(a, b);
                f_candidate = fitness_sum(scratch, d);
            }
            ++evaluations;

            const int slot = static_cast<int>(iters % params.history_len);
            const bool accepted = history.accepts(f_candidate, f);
            if (accepted) {
                current.swap_labels(a, b);
                f = f_candidate;
            }
            if (f < f_best) {
                best = current;
                f_best = f;
                idle = 0;
            } else {
                ++idle;
            }
            history.update(slot, f, f_prev);
            if (options.observer) options.observer(LadsStep{iters, f_candidate, f, f_best, accepted}, history);
            ++iters;
        }
    }

    result.best = std::move(best);
    result.fitness = Fitness{f_best, d.n()};
    result.iterations = iters;
    result.evaluations = evaluations;
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Deadline::Clock::now() - clock_start).count();
    return result;
}

SolverResult lads(const Permutation& start, const Dataset& d, const SolverParams& params, Rng& rng) {
    return lads(start, d, params, rng, Deadline::after(params.time_limit));
}

}  // namespace rankagg
