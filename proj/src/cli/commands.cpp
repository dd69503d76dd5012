#include "rankagg/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "rankagg/dataset.hpp"
#include "rankagg/instances.hpp"

namespace rankagg::cli {

namespace fs = std::filesystem;

namespace {

Dataset load(const fs::path& path, RankingSyntax syntax) {
    if (!fs::exists(path)) throw UsageError("input file not found: " + path.string());
    return read_dataset(path, syntax);
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("error writing " + path.string());
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }
std::string json_number(double x) { return nlohmann::json(x).dump(); }

}  // namespace

std::string instance_file_name(int m, double theta, int index) {
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, "MM%03dn%.3f_%02d.txt", m, theta, index);
    return buffer;
}

std::vector<fs::path> cmd_generate(const GenerateOptions& options) {
    if (options.count < 1) throw std::invalid_argument("count must be at least 1");
    MallowsParams params{options.m, options.theta, Permutation{}, options.n};
    if (options.m >= 2) params.center = Permutation::identity(options.m);
    params.validate();
    fs::create_directories(options.out_dir);

    std::vector<fs::path> written;
    for (int idx = 1; idx <= options.count; ++idx) {
        const std::uint64_t seed = combine_seeds(options.seed, static_cast<std::uint64_t>(idx));
        const Dataset d = generate_dataset(params, seed);
        const std::vector<std::string> comments{
            "generator=mallows theta=" + json_number(options.theta) + " center=identity seed=" +
            std::to_string(options.seed) + " index=" + std::to_string(idx) + " rng=" + std::string(Rng::kAlgorithm)};
        const auto path = options.out_dir / instance_file_name(options.m, options.theta, idx);
        write_dataset(d, path, comments);
        written.push_back(path);
    }
    return written;
}

void cmd_partialize(const PartializeOptions& options) {
    options.params.validate();
    const Dataset d = load(options.in, options.syntax);
    if (!d.complete()) throw UsageError("partialize needs complete rankings without ties: " + options.in.string());
    Rng rng(options.seed);
    std::vector<Ranking> partial;
    partial.reserve(static_cast<std::size_t>(d.n()));
    for (const auto& r : d.rankings()) partial.push_back(partialize(r.to_permutation(), options.params, rng));
    const std::vector<std::string> comments{"partialized p_discard=" + json_number(options.params.p_discard) +
                                            " p_keep=" + json_number(options.params.p_keep) +
                                            " seed=" + std::to_string(options.seed) +
                                            " rng=" + std::string(Rng::kAlgorithm)};
    write_dataset(Dataset(d.m(), std::move(partial)), options.out, comments);
}

std::string result_json(const SolverResult& r, const std::string& instance, const Dataset& d) {
    const auto& p = r.params;
    std::ostringstream out;
    out << "{\"algorithm\":" << json_string(r.algorithm) << ",\"instance\":" << json_string(instance)
        << ",\"m\":" << d.m() << ",\"n\":" << d.n() << ",\"seed\":" << r.seed
        << ",\"rng\":" << json_string(std::string(Rng::kAlgorithm)) << ",\"params\":{\"max_gens\":" << p.max_gens
        << ",\"pop_size\":" << p.pop_size << ",\"beta\":" << json_number(p.beta) << ",\"max_iters\":" << p.max_iters
        << ",\"history_len\":" << p.history_len << ",\"time_limit\":" << json_number(p.time_limit) << "}"
        << ",\"best_ranking\":" << json_string(format_permutation(r.best)) << ",\"fitness_sum\":" << r.fitness.sum
        << ",\"fitness\":" << r.fitness.to_string(3) << ",\"iterations\":" << r.iterations
        << ",\"evaluations\":" << r.evaluations << ",\"generations\":" << r.generations
        << ",\"elapsed_ms\":" << r.elapsed_ms << "}";
    return out.str();
}

std::string cmd_solve(const SolveOptions& options, std::ostream* warnings) {
    options.params.validate();
    const Dataset d = load(options.in, options.syntax);
    const SolverResult r = solve(options.algorithm, d, options.params);
    if (warnings)
        for (const auto& w : r.warnings) *warnings << "rankagg: warning: " << w << "\n";
    return result_json(r, options.in.string(), d);
}

std::string cmd_eval(const EvalOptions& options) {
    const Dataset d = load(options.in, options.syntax);
    Permutation p;
    try {
        const Ranking r = parse_ranking(options.ranking, d.m());
        p = r.to_permutation();
    } catch (const RankingError& e) {
        throw UsageError(std::string("ranking is not a permutation of the instance's labels: ") + e.what());
    }
    const Fitness f = fitness(p, d);
    return "{\"fitness_sum\":" + std::to_string(f.sum) + ",\"fitness\":" + f.to_string(3) + "}";
}

// ---------------------------------------------------------------------------

std::uint64_t bench_run_seed(std::uint64_t master, const std::string& instance, const std::string& algorithm,
                             std::uint64_t run_seed) {
    std::uint64_t h = combine_seeds(master, hash_string(instance));
    h = combine_seeds(h, hash_string(algorithm));
    return combine_seeds(h, run_seed);
}

namespace {

// "MM050n0.200_07" -> "MM050n0.200".
std::string group_of(const std::string& instance) {
    std::string stem = fs::path(instance).stem().string();
    const auto us = stem.rfind('_');
    if (us != std::string::npos && us + 1 < stem.size() &&
        std::all_of(stem.begin() + static_cast<std::ptrdiff_t>(us) + 1, stem.end(),
                    [](unsigned char c) { return std::isdigit(c); }))
        stem.resize(us);
    return stem;
}

}  // namespace

BenchReport cmd_bench(const BenchOptions& options) {
    options.params.validate();
    if (options.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (options.algorithms.empty()) throw std::invalid_argument("no algorithms given");
    if (options.seeds.empty()) throw std::invalid_argument("no seeds given");
    std::vector<Algorithm> algorithms;
    for (const auto& name : options.algorithms) algorithms.push_back(parse_algorithm(name));
    if (!fs::is_directory(options.dir)) throw UsageError("not a directory: " + options.dir.string());

    std::vector<std::string> instances;
    for (const auto& entry : fs::directory_iterator(options.dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            instances.push_back(entry.path().filename().string());
    std::sort(instances.begin(), instances.end());
    if (instances.empty()) throw UsageError("no .txt instance files in " + options.dir.string());

    struct Task {
        std::string instance;
        Algorithm algorithm;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const auto& inst : instances)
        for (auto algo : algorithms)
            for (auto seed : options.seeds) tasks.push_back({inst, algo, seed});
    std::sort(tasks.begin(), tasks.end(), [](const Task& x, const Task& y) {
        const auto xa = algorithm_name(x.algorithm), ya = algorithm_name(y.algorithm);
        return std::tie(x.instance, xa, x.seed) < std::tie(y.instance, ya, y.seed);
    });
    tasks.erase(std::unique(tasks.begin(), tasks.end(),
                            [](const Task& x, const Task& y) {
                                return x.instance == y.instance && x.algorithm == y.algorithm && x.seed == y.seed;
                            }),
                tasks.end());

    BenchReport report;
    report.rows.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            const Task& task = tasks[t];
            BenchRow& row = report.rows[t];
            row.instance = task.instance;
            row.algorithm = std::string(algorithm_name(task.algorithm));
            row.seed = task.seed;
            try {
                const Dataset d = read_dataset(options.dir / task.instance, options.syntax);
                SolverParams params = options.params;
                params.seed = bench_run_seed(options.master_seed, task.instance, row.algorithm, task.seed);
                const SolverResult r = solve(task.algorithm, d, params);
                row.fitness = r.fitness.to_string(3);
                row.fitness_sum = r.fitness.sum;
                row.n = d.n();
                row.elapsed_ms = options.omit_timing ? 0 : r.elapsed_ms;
                row.iterations = r.iterations;
                row.generations = r.generations;
            } catch (const std::exception& e) {
                row.fitness = "error";
                row.error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const int extra = std::min<int>(options.jobs, static_cast<int>(tasks.size())) - 1;
    for (int i = 0; i < extra; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::ostringstream csv;
    csv << "instance,algorithm,seed,fitness,fitness_sum,elapsed_ms,iterations,generations\n";
    for (const auto& row : report.rows) {
        csv << row.instance << ',' << row.algorithm << ',' << row.seed << ',' << row.fitness << ','
            << row.fitness_sum << ',' << row.elapsed_ms << ',' << row.iterations << ',' << row.generations << '\n';
        if (!row.error.empty()) report.failed = true;
    }
    report.csv = csv.str();

    struct Group {
        int runs = 0;
        double best = 0.0, total = 0.0, seconds = 0.0;
    };
    std::map<std::pair<std::string, std::string>, Group> groups;
    for (const auto& row : report.rows) {
        if (!row.error.empty()) continue;
        auto& g = groups[{group_of(row.instance), row.algorithm}];
        const double f = static_cast<double>(row.fitness_sum) / row.n;
        g.best = g.runs == 0 ? f : std::min(g.best, f);
        g.total += f;
        g.seconds += row.elapsed_ms / 1000.0;
        ++g.runs;
    }
    std::ostringstream summary;
    summary << "group,algorithm,runs,f_best,f_avg,t_avg\n";
    for (const auto& [key, g] : groups) {
        char line[128];
        std::snprintf(line, sizeof line, ",%d,%.3f,%.3f,%.3f\n", g.runs, g.best, g.total / g.runs, g.seconds / g.runs);
        summary << key.first << ',' << key.second << line;
    }
    report.summary = summary.str();
    if (!options.out.empty()) write_text(options.out, report.csv);
    return report;
}

// ---------------------------------------------------------------------------

namespace {

void add_solver_flags(CLI::App& app, SolverParams& p) {
    app.add_option("--max-gens", p.max_gens, "Generations without improvement before HER stops")
        ->envname("RANKAGG_MAX_GENS")
        ->capture_default_str();
    app.add_option("--pop-size", p.pop_size, "Population size")->envname("RANKAGG_POP_SIZE")->capture_default_str();
    app.add_option("--beta", p.beta, "Randomized Borda factor in (0, 0.5)")
        ->envname("RANKAGG_BETA")
        ->capture_default_str();
    app.add_option("--max-iters", p.max_iters, "LADS iterations without improvement")
        ->envname("RANKAGG_MAX_ITERS")
        ->capture_default_str();
    app.add_option("--history-len", p.history_len, "LADS cost list length")
        ->envname("RANKAGG_HISTORY_LEN")
        ->capture_default_str();
    app.add_option("--time-limit", p.time_limit, "Wall-clock budget per solve, seconds")
        ->envname("RANKAGG_TIME_LIMIT")
        ->capture_default_str();
}

void add_syntax_flag(CLI::App& app, std::string& syntax) {
    app.add_option("--syntax", syntax, "Ranking syntax of input files: buckets, order, ranks")
        ->check(CLI::IsMember({"buckets", "order", "ranks"}))
        ->envname("RANKAGG_SYNTAX")
        ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank aggregation toolkit: Mallows instances, Borda, LADS and HER solvers", "rankagg"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Sample Mallows instances centred on the identity");
    generate->add_option("--m", gen.m, "Number of labels")->capture_default_str();
    generate->add_option("--theta", gen.theta, "Spread parameter")->capture_default_str();
    generate->add_option("--n", gen.n, "Rankings per instance")->capture_default_str();
    generate->add_option("--count", gen.count, "Number of instances")->capture_default_str();
    generate->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
    generate->add_option("--out", gen.out_dir, "Output directory")->required();

    PartializeOptions part;
    std::string part_syntax = "buckets";
    auto* partial = app.add_subcommand("partialize", "Turn complete rankings into partial rankings with ties");
    partial->add_option("--in", part.in, "Input instance")->required();
    partial->add_option("--out", part.out, "Output instance")->required();
    partial->add_option("--p-discard", part.params.p_discard, "Probability of dropping a label")->capture_default_str();
    partial->add_option("--p-keep", part.params.p_keep, "Probability of joining the current bucket")
        ->capture_default_str();
    partial->add_option("--seed", part.seed, "Seed")->capture_default_str();
    add_syntax_flag(*partial, part_syntax);

    SolveOptions solve_opts;
    std::string solve_algo = "her", solve_syntax = "buckets";
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance and print a JSON result");
    solve_cmd->add_option("--in", solve_opts.in, "Instance file")->required();
    solve_cmd->add_option("--algo", solve_algo, "borda, lads or her")->capture_default_str();
    solve_cmd->add_option("--seed", solve_opts.params.seed, "Seed")->envname("RANKAGG_SEED")->capture_default_str();
    add_solver_flags(*solve_cmd, solve_opts.params);
    add_syntax_flag(*solve_cmd, solve_syntax);

    EvalOptions eval_opts;
    std::string eval_syntax = "buckets";
    auto* eval = app.add_subcommand("eval", "Fitness of a permutation on an instance");
    eval->add_option("--in", eval_opts.in, "Instance file")->required();
    eval->add_option("--ranking", eval_opts.ranking, "Permutation such as 1|3|2")->required();
    add_syntax_flag(*eval, eval_syntax);

    BenchOptions bench_opts;
    std::string bench_syntax = "buckets";
    auto* bench = app.add_subcommand("bench", "Run every instance x algorithm x seed and write CSV");
    bench->add_option("--dir", bench_opts.dir, "Directory of .txt instances")->required();
    bench->add_option("--algos", bench_opts.algorithms, "Comma-separated algorithms")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--seeds", bench_opts.seeds, "Comma-separated run seeds")->delimiter(',')->capture_default_str();
    bench->add_option("--seed", bench_opts.master_seed, "Master seed")->envname("RANKAGG_SEED")->capture_default_str();
    bench->add_option("--jobs", bench_opts.jobs, "Worker threads")->envname("RANKAGG_JOBS")->capture_default_str();
    bench->add_option("--out", bench_opts.out, "CSV output file")->required();
    bench->add_flag("--omit-timing", bench_opts.omit_timing, "Write elapsed_ms as 0 for reproducible bytes");
    add_solver_flags(*bench, bench_opts.params);
    add_syntax_flag(*bench, bench_syntax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        if (!app.get_subcommands().empty()) out << app.get_subcommands().front()->help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "rankagg: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            for (const auto& path : cmd_generate(gen)) err << "wrote " << path.string() << "\n";
        } else if (partial->parsed()) {
            part.syntax = parse_syntax(part_syntax);
            cmd_partialize(part);
        } else if (solve_cmd->parsed()) {
            solve_opts.algorithm = parse_algorithm(solve_algo);
            solve_opts.syntax = parse_syntax(solve_syntax);
            out << cmd_solve(solve_opts, &err) << "\n";
        } else if (eval->parsed()) {
            eval_opts.syntax = parse_syntax(eval_syntax);
            out << cmd_eval(eval_opts) << "\n";
        } else if (bench->parsed()) {
            bench_opts.syntax = parse_syntax(bench_syntax);
            const auto report = cmd_bench(bench_opts);
            out << report.summary;
            for (const auto& row : report.rows)
                if (!row.error.empty())
                    err << "rankagg: run failed: " << row.instance << " " << row.algorithm << " seed " << row.seed
                        << ": " << row.error << "\n";
            return report.failed ? kExitFailure : kExitOk;
        }
    } catch (const DatasetFormatError& e) {
        err << "rankagg: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "rankagg: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "rankagg: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "rankagg: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace rankagg::cli
