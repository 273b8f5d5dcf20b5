#include "msrs/bench.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace msrs {

namespace {

std::vector<BenchRow> bench_one(int index, const Instance& inst, const BenchOptions& options) {
    std::vector<BenchRow> rows;
    std::optional<std::int64_t> opt;
    std::string oracle_status = "oracle-skipped";
    if (inst.num_jobs() <= options.oracle_max_jobs) {
        SearchLimits lim = options.solve.limits;
        lim.time_budget = std::chrono::milliseconds(options.oracle_ms);
        ExactResult ex = solve_exact(inst, lim);
        if (ex.status == ExactStatus::Optimal)
            opt = ex.makespan;
        else
            oracle_status = "oracle-timeout";
    }
    for (Algorithm a : options.algorithms) {
        BenchRow row;
        row.instance = index;
        row.jobs = inst.num_jobs();
        row.machines = inst.m;
        row.algorithm = a;
        auto t0 = std::chrono::steady_clock::now();
        try {
            SolveOptions so = options.solve;
            so.trace = nullptr;
            if (a == Algorithm::Exact) so.limits.time_budget = std::chrono::milliseconds(options.oracle_ms);
            SolveOutcome out = solve(a, inst, so);
            row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            if (!out.ok) {
                row.status = "oracle-timeout";
            } else {
                ValidationReport rep = validate(inst, out.schedule, a == Algorithm::Eptas);
                row.status = rep.valid ? "ok" : "invalid";
                row.makespan = out.makespan;
                row.T = out.T;
                row.ratio_T = out.T > 0 ? out.makespan / out.T : Rat(1);
                row.within_guarantee = rep.valid && row.ratio_T <= out.guarantee;
                if (opt && *opt > 0) row.ratio_opt = out.makespan / Rat(*opt);
                if (!opt && row.status == "ok" && a != Algorithm::Exact) row.status = oracle_status;
            }
        } catch (const std::exception& e) {
            row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            row.status = std::string("error: ") + e.what();
            row.within_guarantee = false;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

BenchReport run_bench(const std::vector<Instance>& instances, const BenchOptions& options) {
    std::vector<std::vector<BenchRow>> per(instances.size());
    std::atomic<std::size_t> next{0};
    int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(instances.size())));
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++)
            per[i] = bench_one(static_cast<int>(i), instances[i], options);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    BenchReport rep;
    for (auto& v : per) rep.rows.insert(rep.rows.end(), v.begin(), v.end());
    for (Algorithm a : options.algorithms) {
        BenchSummary s;
        s.algorithm = a;
        double sum_t = 0, sum_o = 0, sum_w = 0;
        int n_t = 0;
        for (auto& r : rep.rows) {
            if (r.algorithm != a) continue;
            ++s.rows;
            sum_w += r.wall_ms;
            if (!r.within_guarantee) ++s.violations;
            if (r.makespan == 0 && r.T == 0) continue;
            ++n_t;
            s.max_ratio_T = std::max(s.max_ratio_T, r.ratio_T);
            sum_t += to_double(r.ratio_T);
            if (r.ratio_opt) {
                ++s.with_opt;
                sum_o += to_double(*r.ratio_opt);
                s.max_ratio_opt = s.max_ratio_opt ? std::max(*s.max_ratio_opt, *r.ratio_opt) : *r.ratio_opt;
            }
        }
        s.mean_ratio_T = n_t ? sum_t / n_t : 0;
        s.mean_ratio_opt = s.with_opt ? sum_o / s.with_opt : 0;
        s.mean_wall_ms = s.rows ? sum_w / s.rows : 0;
        rep.summary.push_back(s);
    }
    return rep;
}

std::string render_bench(const BenchReport& report, bool with_rows) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4);
    if (with_rows) {
        out << std::left << std::setw(6) << "inst" << std::setw(5) << "n" << std::setw(4) << "m" << std::setw(7)
            << "alg" << std::setw(10) << "makespan" << std::setw(10) << "T" << std::setw(9) << "ratio_T"
            << std::setw(9) << "ratio_OPT" << std::setw(10) << " wall_ms" << "status\n";
        for (auto& r : report.rows) {
            out << std::left << std::setw(6) << r.instance << std::setw(5) << r.jobs << std::setw(4) << r.machines
                << std::setw(7) << to_string(r.algorithm) << std::setw(10) << to_string(r.makespan) << std::setw(10)
                << to_string(r.T) << std::setw(9) << to_double(r.ratio_T) << std::setw(9)
                << (r.ratio_opt ? std::to_string(to_double(*r.ratio_opt)).substr(0, 6) : std::string("-")) << " "
                << std::setw(9) << r.wall_ms << r.status << "\n";
        }
        out << "\n";
    }
    out << std::left << std::setw(7) << "alg" << std::setw(7) << "rows" << std::setw(12) << "max_ratio_T" << std::setw(13)
        << "mean_ratio_T" << std::setw(14) << "max_ratio_OPT" << std::setw(15) << "mean_ratio_OPT" << std::setw(11)
        << "violations" << "mean_wall_ms\n";
    for (auto& s : report.summary) {
        out << std::left << std::setw(7) << to_string(s.algorithm) << std::setw(7) << s.rows << std::setw(12)
            << to_double(s.max_ratio_T) << std::setw(13) << s.mean_ratio_T << std::setw(14)
            << (s.max_ratio_opt ? std::to_string(to_double(*s.max_ratio_opt)).substr(0, 6) : std::string("-"))
            << std::setw(15) << s.mean_ratio_opt << std::setw(11) << s.violations << s.mean_wall_ms << "\n";
    }
    return out.str();
}

}  // namespace msrs
