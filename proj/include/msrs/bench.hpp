#pragma once

#include "msrs/solve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msrs {

struct BenchOptions {
    std::vector<Algorithm> algorithms{Algorithm::A53, Algorithm::A32};
    SolveOptions solve;
    int oracle_max_jobs = 9;
    std::int64_t oracle_ms = 10'000;
    int threads = 0;  // 0 = hardware concurrency
};

struct BenchRow {
    int instance = 0;
    int jobs = 0;
    int machines = 0;
    Algorithm algorithm = Algorithm::A53;
    std::string status;  // ok, oracle-timeout, oracle-skipped, error: ...
    Rat makespan = 0;
    Rat T = 0;
    Rat ratio_T = 0;
    std::optional<Rat> ratio_opt;
    double wall_ms = 0;
    bool within_guarantee = true;
};

struct BenchSummary {
    Algorithm algorithm = Algorithm::A53;
    int rows = 0;
    Rat max_ratio_T = 0;
    double mean_ratio_T = 0;
    std::optional<Rat> max_ratio_opt;
    double mean_ratio_opt = 0;
    int with_opt = 0;
    int violations = 0;
    double mean_wall_ms = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;  // ordered by (instance, algorithm)
    std::vector<BenchSummary> summary;
};

BenchReport run_bench(const std::vector<Instance>& instances, const BenchOptions& options = {});
std::string render_bench(const BenchReport& report, bool with_rows = true);

}  // namespace msrs
