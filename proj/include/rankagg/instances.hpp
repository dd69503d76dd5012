#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "rankagg/dataset.hpp"
#include "rankagg/random.hpp"
#include "rankagg/ranking.hpp"

namespace rankagg {

struct MallowsParams {
    int m = 0;
    // Spread. Benchmarks use theta > 0; theta == 0 (uniform) is accepted.
    double theta = 0.0;
    Permutation center;
    int n = 1;

    // Throws std::invalid_argument.
    void validate() const;
};

struct PartializeParams {
    double p_discard = 2.0 / 3.0;
    double p_keep = 5.0 / 6.0;

    void validate() const;
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One draw from P(pi) ∝ exp(-theta * d(pi, center)) by repeated insertion.
Permutation sample_mallows(const MallowsParams& params, Rng& rng);

Dataset generate_dataset(const MallowsParams& params, std::uint64_t seed);

// Random partial ranking consistent with p. Redraws until at least two
// labels survive; throws GenerationError after kMaxPartializeAttempts.
inline constexpr int kMaxPartializeAttempts = 1000;
Ranking partialize(const Permutation& p, const PartializeParams& params, Rng& rng);

// Dataset files -----------------------------------------------------------

enum class RankingSyntax {
    Buckets,  // "1|3,4|2"
    Order,    // whitespace-separated labels, most preferred first
    Ranks,    // whitespace-separated rank of label 1, 2, ..., m
};

RankingSyntax parse_syntax(std::string_view name);

class DatasetFormatError : public std::runtime_error {
public:
    DatasetFormatError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    // 1-based, 0 when not tied to a line.
    int line() const { return line_; }

private:
    int line_;
};

Dataset parse_dataset(std::string_view text, RankingSyntax syntax = RankingSyntax::Buckets);
Dataset read_dataset(const std::filesystem::path& path, RankingSyntax syntax = RankingSyntax::Buckets);

// Header line "# m=<m> n=<n>", then extra comment lines, then one ranking per line.
std::string serialize_dataset(const Dataset& d, std::span<const std::string> comments = {});
void write_dataset(const Dataset& d, const std::filesystem::path& path, std::span<const std::string> comments = {});

}  // namespace rankagg
