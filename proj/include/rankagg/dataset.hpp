#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rankagg/ranking.hpp"

namespace rankagg {

// n rankings over a common universe of m labels.
class Dataset {
public:
    Dataset() = default;
    Dataset(int m, std::vector<Ranking> rankings);

    int m() const { return m_; }
    int n() const { return static_cast<int>(rankings_.size()); }
    std::span<const Ranking> rankings() const { return rankings_; }
    const Ranking& operator[](int k) const { return rankings_[static_cast<std::size_t>(k)]; }

    // Every ranking is a Permutation.
    bool complete() const { return complete_; }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    int m_ = 0;
    std::vector<Ranking> rankings_;
    bool complete_ = false;
};

// Objective value kept as the exact integer sum of distances; the mean is
// derived only for reporting.
struct Fitness {
    std::int64_t sum = 0;
    int n = 1;

    double mean() const { return static_cast<double>(sum) / n; }
    // sum / n rounded half-up to `decimals` places, computed in integers.
    std::string to_string(int decimals = 3) const;
};

std::string format_fixed(std::int64_t numerator, std::int64_t denominator, int decimals);

// Sum over rankings of extended_kendall(p, ranking).
std::int64_t fitness_sum(const Permutation& p, const Dataset& d);
Fitness fitness(const Permutation& p, const Dataset& d);

}  // namespace rankagg
