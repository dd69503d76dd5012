#include "rankagg/borda.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rankagg {

std::vector<double> borda_scores(const Dataset& d, std::span<const int> subset) {
    const int m = d.m();
    std::vector<double> score(static_cast<std::size_t>(m) + 1, 0.0);
    for (int k : subset) {
        const Ranking& r = d[k];
        const int ranked = r.ranked_count();
        const bool complete = ranked == m;
        const double missing = (m + 1) / 2.0;
        const double scale = static_cast<double>(m + 1) / (ranked + 1);
        if (!complete) {
            for (Label label = 1; label <= m; ++label)
                if (!r.is_ranked(label)) score[static_cast<std::size_t>(label)] += missing;
        }
        const auto start = r.bucket_start();
        for (int b = 1; b <= r.bucket_count(); ++b) {
            const int first = start[static_cast<std::size_t>(b - 1)] + 1;
            const int last = start[static_cast<std::size_t>(b)];
            const double mean_rank = (first + last) / 2.0;
            const double points = complete ? m - mean_rank : (ranked + 1 - mean_rank) * scale;
            for (Label label : r.bucket(b)) score[static_cast<std::size_t>(label)] += points;
        }
    }
    return score;
}

Permutation borda(const Dataset& d, std::span<const int> subset, Rng& rng) {
    const auto score = borda_scores(d, subset);
    std::vector<Label> order(static_cast<std::size_t>(d.m()));
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(std::span<Label>(order));
    std::stable_sort(order.begin(), order.end(), [&](Label x, Label y) {
        return score[static_cast<std::size_t>(x)] > score[static_cast<std::size_t>(y)];
    });
    return Permutation(std::move(order));
}

Permutation borda(const Dataset& d, Rng& rng) {
    std::vector<int> all(static_cast<std::size_t>(d.n()));
    std::iota(all.begin(), all.end(), 0);
    return borda(d, all, rng);
}

int randomized_borda_subset_size(int n, double beta) {
    // The epsilon absorbs representation error, e.g. (1 - 0.2) * 100.
    const int size = static_cast<int>(std::ceil((1.0 - beta) * n - 1e-9));
    if (size < 1) throw std::invalid_argument("randomized borda: subset would be empty");
    return std::min(size, n);
}

Permutation randomized_borda(const Dataset& d, double beta, Rng& rng) {
    if (!(beta > 0.0 && beta < 0.5)) throw std::invalid_argument("randomized borda: beta must be in (0, 0.5)");
    const int size = randomized_borda_subset_size(d.n(), beta);
    std::vector<int> index(static_cast<std::size_t>(d.n()));
    std::iota(index.begin(), index.end(), 0);
    // Partial Fisher-Yates: the first `size` slots become the sample.
    for (int i = 0; i < size; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(d.n() - i)));
        std::swap(index[static_cast<std::size_t>(i)], index[static_cast<std::size_t>(j)]);
    }
    index.resize(static_cast<std::size_t>(size));
    std::sort(index.begin(), index.end());
    return borda(d, index, rng);
}

}  // namespace rankagg
