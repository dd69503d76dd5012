#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rankagg/instances.hpp"
#include "rankagg/solver.hpp"

namespace rankagg::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Thrown for bad flag values or unreadable inputs; maps to kExitUsage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenerateOptions {
    int m = 50;
    double theta = 0.2;
    int n = 100;
    int count = 1;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir = ".";
};

// Benchmark-style name, e.g. "MM050n0.200_01.txt". index is 1-based.
std::string instance_file_name(int m, double theta, int index);

std::vector<std::filesystem::path> cmd_generate(const GenerateOptions& options);

struct PartializeOptions {
    std::filesystem::path in;
    std::filesystem::path out;
    PartializeParams params;
    std::uint64_t seed = 0;
    RankingSyntax syntax = RankingSyntax::Buckets;
};

void cmd_partialize(const PartializeOptions& options);

struct SolveOptions {
    std::filesystem::path in;
    Algorithm algorithm = Algorithm::Her;
    SolverParams params;
    RankingSyntax syntax = RankingSyntax::Buckets;
};

// Single-line JSON object describing `result`.
std::string result_json(const SolverResult& result, const std::string& instance, const Dataset& d);

// Solver warnings go to `warnings` when given.
std::string cmd_solve(const SolveOptions& options, std::ostream* warnings = nullptr);

struct EvalOptions {
    std::filesystem::path in;
    std::string ranking;
    RankingSyntax syntax = RankingSyntax::Buckets;
};

std::string cmd_eval(const EvalOptions& options);

struct BenchOptions {
    std::filesystem::path dir;
    std::vector<std::string> algorithms{"her"};
    std::vector<std::uint64_t> seeds{1};
    std::uint64_t master_seed = 0;
    SolverParams params;
    int jobs = 1;
    std::filesystem::path out;
    RankingSyntax syntax = RankingSyntax::Buckets;
    // Writes elapsed_ms as 0 so that reruns produce identical bytes.
    bool omit_timing = false;
};

struct BenchRow {
    std::string instance;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::string fitness;  // sum / n with 3 decimals, or "error"
    std::int64_t fitness_sum = -1;
    int n = 1;
    std::int64_t elapsed_ms = 0;
    std::int64_t iterations = 0;
    std::int64_t generations = 0;
    std::string error;
};

struct BenchReport {
    std::vector<BenchRow> rows;  // sorted by (instance, algorithm, seed)
    std::string csv;
    std::string summary;
    bool failed = false;
};

// Seed of one benchmark run; independent of scheduling.
std::uint64_t bench_run_seed(std::uint64_t master, const std::string& instance, const std::string& algorithm,
                             std::uint64_t run_seed);

BenchReport cmd_bench(const BenchOptions& options);

// Full command line front end. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankagg::cli
