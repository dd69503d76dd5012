#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "rankagg/cli/commands.hpp"
#include "rankagg/instances.hpp"

using namespace rankagg;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "rankagg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("rankagg_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

std::string drop_elapsed(const std::string& json) {
    return std::regex_replace(json, std::regex("\"elapsed_ms\":[0-9]+"), "\"elapsed_ms\":0");
}

}  // namespace

TEST_CASE("instance file names follow the benchmark convention") {
    CHECK(cli::instance_file_name(50, 0.2, 1) == "MM050n0.200_01.txt");
    CHECK(cli::instance_file_name(250, 0.001, 20) == "MM250n0.001_20.txt");
}

TEST_CASE("generate writes count deterministic files") {
    const auto dir = fresh_dir("generate");
    auto r = run_cli({"generate", "--m", "12", "--theta", "0.2", "--n", "10", "--count", "3", "--seed", "7", "--out",
                      (dir / "a").string()});
    REQUIRE(r.code == 0);
    r = run_cli({"generate", "--m", "12", "--theta", "0.2", "--n", "10", "--count", "3", "--seed", "7", "--out",
                 (dir / "b").string()});
    REQUIRE(r.code == 0);
    for (int i = 1; i <= 3; ++i) {
        const auto name = cli::instance_file_name(12, 0.2, i);
        REQUIRE(fs::exists(dir / "a" / name));
        CHECK(slurp(dir / "a" / name) == slurp(dir / "b" / name));
        const auto d = read_dataset(dir / "a" / name);
        CHECK(d.m() == 12);
        CHECK(d.n() == 10);
        CHECK(d.complete());
    }
    CHECK(slurp(dir / "a" / cli::instance_file_name(12, 0.2, 1)) !=
          slurp(dir / "a" / cli::instance_file_name(12, 0.2, 2)));

    r = run_cli({"generate", "--m", "2", "--count", "1", "--n", "5", "--out", (dir / "c").string()});
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "c" / "MM002n0.200_01.txt"));

    r = run_cli({"generate", "--m", "1", "--out", (dir / "d").string()});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    fs::remove_all(dir);
}

TEST_CASE("partialize") {
    const auto dir = fresh_dir("partialize");
    spit(dir / "in.txt", "# m=4 n=3\n1|4|3|2\n2|1|3|4\n4|3|2|1\n");
    auto r = run_cli({"partialize", "--in", (dir / "in.txt").string(), "--out", (dir / "same.txt").string(),
                      "--p-discard", "0", "--p-keep", "0"});
    REQUIRE(r.code == 0);
    CHECK(read_dataset(dir / "same.txt") == read_dataset(dir / "in.txt"));

    r = run_cli({"partialize", "--in", (dir / "in.txt").string(), "--out", (dir / "p.txt").string(), "--seed", "3"});
    REQUIRE(r.code == 0);
    const auto partial = read_dataset(dir / "p.txt");
    CHECK(partial.n() == 3);
    CHECK(partial.m() == 4);

    spit(dir / "bad.txt", "# m=4 n=2\n1|4|3|2\n1|\n");
    r = run_cli({"partialize", "--in", (dir / "bad.txt").string(), "--out", (dir / "x.txt").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    spit(dir / "tied.txt", "1|3,4|2\n");
    r = run_cli({"partialize", "--in", (dir / "tied.txt").string(), "--out", (dir / "x.txt").string()});
    CHECK(r.code == 2);
    fs::remove_all(dir);
}

TEST_CASE("solve prints the result schema") {
    const auto dir = fresh_dir("solve");
    spit(dir / "u.txt", "# m=4 n=3\n2|4|1|3\n2|4|1|3\n2|4|1|3\n");
    auto r = run_cli({"solve", "--in", (dir / "u.txt").string(), "--algo", "borda"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    const std::vector<std::string> expected_keys{"algorithm",  "instance",    "m",          "n",
                                                 "seed",       "rng",         "params",     "best_ranking",
                                                 "fitness_sum", "fitness",    "iterations", "evaluations",
                                                 "generations", "elapsed_ms"};
    CHECK(keys == expected_keys);
    CHECK(j["best_ranking"] == "2|4|1|3");
    CHECK(j["fitness_sum"] == 0);
    CHECK(r.out.find("\"fitness\":0.000") != std::string::npos);
    CHECK(j["params"]["max_gens"] == 60);
    CHECK(j["params"]["pop_size"] == 20);
    CHECK(j["params"]["beta"] == 0.2);
    CHECK(j["params"]["max_iters"] == 5000);
    CHECK(j["params"]["history_len"] == 5);

    // Golden line for a fixed tiny instance, timing masked.
    spit(dir / "g.txt", "# m=3 n=2\n1|2|3\n3|2|1\n");
    r = run_cli({"solve", "--in", (dir / "g.txt").string(), "--algo", "borda", "--seed", "4"});
    REQUIRE(r.code == 0);
    const auto instance = nlohmann::json((dir / "g.txt").string()).dump();
    const std::string golden_prefix = "{\"algorithm\":\"borda\",\"instance\":" + instance +
                                      ",\"m\":3,\"n\":2,\"seed\":4,\"rng\":\"mt19937_64\",\"params\":{\"max_gens\":60,"
                                      "\"pop_size\":20,\"beta\":0.2,\"max_iters\":5000,\"history_len\":5,"
                                      "\"time_limit\":7200.0},\"best_ranking\":";
    CHECK(r.out.rfind(golden_prefix, 0) == 0);
    CHECK(r.out.find(",\"fitness_sum\":3,\"fitness\":1.500,\"iterations\":0,\"evaluations\":1,\"generations\":0,"
                     "\"elapsed_ms\":") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("solve is deterministic and validates flags") {
    const auto dir = fresh_dir("solve_det");
    REQUIRE(run_cli({"generate", "--m", "15", "--n", "20", "--theta", "0.1", "--out", dir.string()}).code == 0);
    const auto inst = (dir / cli::instance_file_name(15, 0.1, 1)).string();
    const std::vector<std::string> args{"solve",      "--in",         inst,  "--algo",    "her", "--seed",
                                        "1",          "--max-iters",  "300", "--max-gens", "5"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(drop_elapsed(a.out) == drop_elapsed(b.out));
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["algorithm"] == "her");
    CHECK(j["generations"].get<int>() > 5);

    CHECK(run_cli({"solve", "--in", inst, "--algo", "ga"}).code == 2);
    CHECK(run_cli({"solve", "--in", inst, "--beta", "0.7"}).code == 2);
    CHECK(run_cli({"solve", "--in", (dir / "nope.txt").string()}).code == 2);
    CHECK(run_cli({"solve"}).code == 2);

    const auto lads = run_cli({"solve", "--in", inst, "--algo", "lads", "--seed", "2"});
    CHECK(lads.code == 0);
    CHECK(nlohmann::json::parse(lads.out)["generations"] == 0);
    fs::remove_all(dir);
}

TEST_CASE("environment variables override solver defaults") {
    const auto dir = fresh_dir("env");
    spit(dir / "g.txt", "# m=3 n=2\n1|2|3\n3|2|1\n");
    setenv("RANKAGG_MAX_GENS", "7", 1);
    const auto r = run_cli({"solve", "--in", (dir / "g.txt").string(), "--algo", "borda"});
    unsetenv("RANKAGG_MAX_GENS");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["params"]["max_gens"] == 7);
    fs::remove_all(dir);
}

TEST_CASE("eval") {
    const auto dir = fresh_dir("eval");
    spit(dir / "id.txt", "1|2|3|4\n1|2|3|4\n");
    auto r = run_cli({"eval", "--in", (dir / "id.txt").string(), "--ranking", "1|2|3|4"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "{\"fitness_sum\":0,\"fitness\":0.000}\n");

    // σ_2 and σ_3 against 1|4|3|2: σ_2 has pairs (1,3),(1,4),(1,2),(3,2),(4,2) and
    // 1|4|3|2 agrees on all; σ_3 disagrees on (2,4).
    spit(dir / "sigma.txt", "# m=4 n=2\n1|3,4|2\n1|2|4\n");
    r = run_cli({"eval", "--in", (dir / "sigma.txt").string(), "--ranking", "1|4|3|2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "{\"fitness_sum\":1,\"fitness\":0.500}\n");

    CHECK(run_cli({"eval", "--in", (dir / "sigma.txt").string(), "--ranking", "1|3,4|2"}).code == 2);
    CHECK(run_cli({"eval", "--in", (dir / "sigma.txt").string(), "--ranking", "1|2|3"}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("bench rows are sorted and independent of the worker count") {
    const auto dir = fresh_dir("bench");
    REQUIRE(run_cli({"generate", "--m", "12", "--n", "15", "--theta", "0.1", "--count", "3", "--seed", "5", "--out",
                     (dir / "inst").string()})
                .code == 0);
    auto bench = [&](const std::string& jobs, const std::string& out) {
        return run_cli({"bench", "--dir", (dir / "inst").string(), "--algos", "her,borda,lads", "--seeds", "2,1",
                        "--jobs", jobs, "--out", (dir / out).string(), "--omit-timing", "--max-iters", "200",
                        "--max-gens", "3"});
    };
    const auto one = bench("1", "one.csv");
    const auto eight = bench("8", "eight.csv");
    REQUIRE(one.code == 0);
    REQUIRE(eight.code == 0);
    const auto csv = slurp(dir / "one.csv");
    CHECK(csv == slurp(dir / "eight.csv"));
    CHECK(one.out == eight.out);

    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "instance,algorithm,seed,fitness,fitness_sum,elapsed_ms,iterations,generations");
    int rows = 0;
    std::getline(lines, line);
    CHECK(line.rfind("MM012n0.100_01.txt,borda,1,", 0) == 0);
    ++rows;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 3 * 3 * 2);
    CHECK(one.out.find("group,algorithm,runs,f_best,f_avg,t_avg") != std::string::npos);
    CHECK(one.out.find("MM012n0.100,her,6,") != std::string::npos);

    CHECK(run_cli({"bench", "--dir", (dir / "inst").string(), "--algos", "sa", "--out", (dir / "x.csv").string()})
              .code == 2);
    fs::create_directories(dir / "empty");
    CHECK(run_cli({"bench", "--dir", (dir / "empty").string(), "--out", (dir / "x.csv").string()}).code == 2);

    // A malformed instance becomes a failed row and a nonzero exit.
    spit(dir / "inst" / "broken.txt", "1|\n");
    const auto failed = run_cli({"bench", "--dir", (dir / "inst").string(), "--algos", "borda", "--out",
                                 (dir / "f.csv").string()});
    CHECK(failed.code == 1);
    CHECK(slurp(dir / "f.csv").find("broken.txt,borda,1,error,") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("bench run seeds depend only on the run key") {
    const auto a = cli::bench_run_seed(0, "MM050n0.200_01.txt", "her", 1);
    CHECK(a == cli::bench_run_seed(0, "MM050n0.200_01.txt", "her", 1));
    CHECK(a != cli::bench_run_seed(0, "MM050n0.200_02.txt", "her", 1));
    CHECK(a != cli::bench_run_seed(0, "MM050n0.200_01.txt", "lads", 1));
    CHECK(a != cli::bench_run_seed(1, "MM050n0.200_01.txt", "her", 1));
    CHECK(a != cli::bench_run_seed(0, "MM050n0.200_01.txt", "her", 2));
}
