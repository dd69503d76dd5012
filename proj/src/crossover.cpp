#include "rankagg/crossover.hpp"

#include <algorithm>
#include <numeric>

namespace rankagg {

std::vector<int> concordant_out_degree(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw RankingError("crossover parents have different universe sizes");
    const int m = u.size();
    std::vector<int> degree(static_cast<std::size_t>(m) + 1, 0);
    const auto v_rank = v.rank_table();
    const auto order = u.order();
    // Walk u's order: every later label in u is a candidate; keep those also
    // later in v.
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int vx = v_rank[static_cast<std::size_t>(order[i])];
        int count = 0;
        for (std::size_t j = i + 1; j < order.size(); ++j) count += v_rank[static_cast<std::size_t>(order[j])] > vx;
        degree[static_cast<std::size_t>(order[i])] = count;
    }
    return degree;
}

Permutation cpsc(const Permutation& u, const Permutation& v, Rng& rng) {
    const auto degree = concordant_out_degree(u, v);
    std::vector<Label> order(static_cast<std::size_t>(u.size()));
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(std::span<Label>(order));
    std::stable_sort(order.begin(), order.end(), [&](Label x, Label y) {
        return degree[static_cast<std::size_t>(x)] > degree[static_cast<std::size_t>(y)];
    });
    return Permutation(std::move(order));
}

}  // namespace rankagg
