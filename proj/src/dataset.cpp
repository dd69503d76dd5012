#include "rankagg/dataset.hpp"

#include <algorithm>

#include "rankagg/distance.hpp"

namespace rankagg {

Dataset::Dataset(int m, std::vector<Ranking> rankings) : m_(m), rankings_(std::move(rankings)) {
    if (rankings_.empty()) throw RankingError("a dataset needs at least one ranking");
    for (const auto& r : rankings_) {
        if (r.universe() != m_)
            throw RankingError("ranking universe " + std::to_string(r.universe()) + " does not match dataset m=" +
                               std::to_string(m_));
    }
    complete_ = std::all_of(rankings_.begin(), rankings_.end(), [](const Ranking& r) { return r.is_permutation(); });
}

std::string format_fixed(std::int64_t numerator, std::int64_t denominator, int decimals) {
    std::int64_t scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    const bool negative = (numerator < 0) != (denominator < 0) && numerator != 0;
    const std::int64_t num = numerator < 0 ? -numerator : numerator;
    const std::int64_t den = denominator < 0 ? -denominator : denominator;
    // Round half-up on the magnitude.
    const std::int64_t scaled = (num * scale * 2 + den) / (den * 2);
    std::string out = std::to_string(scaled / scale);
    if (decimals > 0) {
        std::string frac = std::to_string(scaled % scale);
        out += '.';
        out += std::string(static_cast<std::size_t>(decimals) - frac.size(), '0') + frac;
    }
    return negative ? "-" + out : out;
}

std::string Fitness::to_string(int decimals) const { return format_fixed(sum, n, decimals); }

std::int64_t fitness_sum(const Permutation& p, const Dataset& d) {
    if (p.size() != d.m())
        throw RankingError("permutation size " + std::to_string(p.size()) + " does not match dataset m=" +
                           std::to_string(d.m()));
    std::int64_t total = 0;
    for (const auto& r : d.rankings()) total += extended_kendall(p, r);
    return total;
}

Fitness fitness(const Permutation& p, const Dataset& d) { return {fitness_sum(p, d), d.n()}; }

}  // namespace rankagg
