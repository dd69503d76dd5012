#include "rankagg/distance.hpp"

#include <algorithm>
#include <string>

namespace rankagg {

namespace {

void require_same_universe(int a, int b) {
    if (a != b)
        throw RankingError("universe size mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

// Bottom-up merge sort. Taking the left element on equality keeps ties out
// of the count.
std::int64_t merge_count(std::vector<int>& values, std::vector<int>& scratch) {
    const std::size_t n = values.size();
    std::int64_t inversions = 0;
    scratch.resize(n);
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo < n; lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, n);
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (values[i] <= values[j]) {
                    scratch[k++] = values[i++];
                } else {
                    inversions += static_cast<std::int64_t>(mid - i);
                    scratch[k++] = values[j++];
                }
            }
            while (i < mid) scratch[k++] = values[i++];
            while (j < hi) scratch[k++] = values[j++];
        }
        values.swap(scratch);
    }
    return inversions;
}

}  // namespace

std::int64_t count_inversions(std::vector<int>& values) {
    std::vector<int> scratch;
    return merge_count(values, scratch);
}

std::int64_t kendall_distance(const Permutation& u, const Permutation& v) {
    require_same_universe(u.size(), v.size());
    std::vector<int> composed;
    composed.reserve(static_cast<std::size_t>(u.size()));
    for (Label label : u.order()) composed.push_back(v.rank_of(label));
    return count_inversions(composed);
}

std::int64_t extended_kendall(const Permutation& u, const Ranking& s) {
    require_same_universe(u.size(), s.universe());
    std::vector<int> buckets;
    buckets.reserve(static_cast<std::size_t>(s.ranked_count()));
    for (Label label : u.order()) {
        const int b = s.bucket_of(label);
        if (b != Ranking::kUnranked) buckets.push_back(b);
    }
    return count_inversions(buckets);
}

std::int64_t extended_kendall_rankings(const Ranking& a, const Ranking& b) {
    require_same_universe(a.universe(), b.universe());
    const int m = a.universe();
    std::int64_t count = 0;
    for (Label x = 1; x <= m; ++x) {
        if (!a.is_ranked(x) || !b.is_ranked(x)) continue;
        for (Label y = x + 1; y <= m; ++y) {
            if (!a.is_ranked(y) || !b.is_ranked(y)) continue;
            const int da = a.bucket_of(x) - a.bucket_of(y);
            const int db = b.bucket_of(x) - b.bucket_of(y);
            if ((da < 0 && db > 0) || (da > 0 && db < 0)) ++count;
        }
    }
    return count;
}

std::vector<PreferencePair> decompose_pairs(const Ranking& r) {
    std::vector<PreferencePair> pairs;
    const auto flat = r.flat();
    const auto start = r.bucket_start();
    for (int b = 1; b <= r.bucket_count(); ++b) {
        const auto later = static_cast<std::size_t>(start[static_cast<std::size_t>(b)]);
        for (Label x : r.bucket(b))
            for (std::size_t k = later; k < flat.size(); ++k) pairs.push_back({x, flat[k]});
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<PreferencePair> decompose_pairs(const Permutation& p) {
    std::vector<PreferencePair> pairs;
    const auto order = p.order();
    pairs.reserve(order.size() * (order.size() - 1) / 2);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) pairs.push_back({order[i], order[j]});
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<PreferencePair> concordant_pairs(const Permutation& u, const Permutation& v) {
    require_same_universe(u.size(), v.size());
    std::vector<PreferencePair> pairs;
    const int m = u.size();
    for (Label x = 1; x <= m; ++x) {
        for (Label y = 1; y <= m; ++y) {
            if (x != y && u.rank_of(x) < u.rank_of(y) && v.rank_of(x) < v.rank_of(y)) pairs.push_back({x, y});
        }
    }
    return pairs;
}

}  // namespace rankagg
