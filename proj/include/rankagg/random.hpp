#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace rankagg {

// Seedable random stream with platform-independent output. The engine's
// sequence is fixed by the standard; bounded integers and reals are derived
// here rather than through std distributions, whose algorithms vary between
// standard libraries.
class Rng {
public:
    static constexpr std::string_view kAlgorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// splitmix64 finalizer, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t combine_seeds(std::uint64_t a, std::uint64_t b);
// FNV-1a, stable across platforms.
std::uint64_t hash_string(std::string_view s);

}  // namespace rankagg
