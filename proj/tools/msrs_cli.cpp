#include "msrs/approx32.hpp"
#include "msrs/bench.hpp"
#include "msrs/bounds.hpp"
#include "msrs/gantt.hpp"
#include "msrs/generate.hpp"
#include "msrs/hardness.hpp"
#include "msrs/io.hpp"
#include "msrs/solve.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace msrs;

namespace {

enum Exit { Ok = 0, Invalid = 1, Parse = 2, Budget = 3 };

struct Failure {
    int code;
    std::string message;
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_file(path, text);
}

std::string load(const std::string& path) {
    try {
        return read_file(path);
    } catch (const std::exception& e) {
        throw Failure{Parse, e.what()};
    }
}

Rat parse_epsilon(const std::string& text) {
    Rat e = parse_rat(text);
    if (!(e > 0 && 2 * e <= 1)) throw Failure{Parse, "--epsilon must lie in (0, 1/2], got " + text};
    return e;
}

template <class F>
auto parsed(const std::string& path, F&& f) {
    try {
        return f(load(path));
    } catch (const ParseError& e) {
        throw Failure{Parse, path + ":" + e.what()};
    }
}

std::string summary_line(const Instance& inst, const SolveOutcome& out) {
    std::ostringstream ss;
    ss << "algorithm " << to_string(out.algorithm) << "\n"
       << "machines " << inst.m << " classes " << inst.num_classes() << " jobs " << inst.num_jobs() << "\n"
       << "makespan " << to_string(out.makespan) << "\n"
       << "T " << to_string(out.T) << "\n"
       << "ratio_to_T " << (out.T > 0 ? to_string(out.makespan / out.T) : std::string("-")) << " ("
       << (out.T > 0 ? to_decimal(out.makespan / out.T, 4) : std::string("-")) << ")\n"
       << "guarantee " << to_string(out.guarantee) << "\n";
    if (out.eptas) {
        const EptasReport& r = *out.eptas;
        ss << "eptas.shortcut " << (r.shortcut.empty() ? "none" : r.shortcut) << "\n"
           << "eptas.T_star " << to_string(r.T_star) << "\n"
           << "eptas.delta " << to_string(r.delta) << "\n"
           << "eptas.mu " << to_string(r.mu) << "\n"
           << "eptas.xi " << to_string(r.xi) << "\n"
           << "eptas.medium_mass " << to_string(r.medium_mass) << "\n"
           << "eptas.removed_classes " << r.removed_classes << " (mass " << to_string(r.removed_class_mass) << ")\n"
           << "eptas.light_small_mass " << to_string(r.light_small_mass) << "\n"
           << "eptas.model |P| " << r.P << " layers " << r.layers << " windows " << r.windows << " configurations "
           << r.configurations << " placeholders " << r.placeholders << "\n"
           << "eptas.extra_machines " << r.extra_machines << "\n"
           << "eptas.tiny_fallback " << r.tiny_fallback << "\n"
           << "eptas.guesses " << r.guesses << " ip_nodes " << r.ip_nodes << "\n"
           << "eptas.bound " << to_string(r.bound) << "\n";
    }
    if (out.exact_status) ss << "exact.status " << to_string(*out.exact_status) << " nodes " << out.nodes << "\n";
    return ss.str();
}

struct SolveArgs {
    std::string instance, output, algorithm = "a32", epsilon = "1/2", mode = "augmented";
    std::uint64_t config_cap = EptasOptions{}.config_cap;
    std::int64_t max_nodes = SearchLimits{}.max_nodes, time_ms = 0, ip_nodes = EptasOptions{}.ip_node_budget;
    bool trace = false, allow_zero = false, no_compact = false;
};

int run_solve(const SolveArgs& a) {
    const std::string text = load(a.instance);
    SearchLimits limits;
    limits.max_nodes = a.max_nodes;
    limits.time_budget = std::chrono::milliseconds(a.time_ms);
    bool multires = false;
    try {
        multires = is_multires_text(text);
    } catch (const ParseError& e) {
        throw Failure{Parse, a.instance + ":" + e.what()};
    }
    if (multires) {
        if (a.algorithm != "exact") throw Failure{Parse, "multi-resource instances are solved by --algorithm exact only"};
        auto inst = parsed(a.instance, [](const std::string& t) { return parse_multires(t); });
        ExactResult r = solve_exact(inst, limits);
        if (r.status != ExactStatus::Optimal)
            throw Failure{Budget, "oracle budget exhausted (bounds " + std::to_string(r.lower) + ".." +
                                      std::to_string(r.upper) + ")"};
        emit(a.output, write_schedule(r.schedule));
        std::ostream& info = a.output.empty() ? std::cerr : std::cout;
        info << "algorithm exact\nmakespan " << r.makespan << "\nexact.status optimal nodes " << r.nodes << "\n";
        return Ok;
    }
    Instance inst = parsed(a.instance, [&](const std::string& t) { return parse_instance(t, a.allow_zero); });
    SolveOptions so;
    try {
        so.epsilon = parse_epsilon(a.epsilon);
        so.mode = parse_mode(a.mode);
    } catch (const Failure&) {
        throw;
    } catch (const std::exception& e) {
        throw Failure{Parse, e.what()};
    }
    so.eptas.config_cap = a.config_cap;
    so.eptas.ip_node_budget = a.ip_nodes;
    so.eptas.compact = !a.no_compact;
    so.limits = limits;
    Trace trace;
    if (a.trace) so.trace = &trace;
    Algorithm alg;
    try {
        alg = parse_algorithm(a.algorithm);
    } catch (const std::exception& e) {
        throw Failure{Parse, e.what()};
    }
    SolveOutcome out;
    try {
        out = solve(alg, inst, so);
    } catch (const SizeBudgetError& e) {
        throw Failure{Budget, std::string("eptas size budget: ") + e.what()};
    } catch (const SearchBudgetError& e) {
        throw Failure{Budget, std::string("eptas search budget: ") + e.what()};
    }
    if (!out.ok) throw Failure{Budget, "oracle budget exhausted (lower bound " + to_string(out.T) + ")"};
    ValidationReport rep = validate(inst, out.schedule, alg == Algorithm::Eptas);
    emit(a.output, write_schedule(out.schedule));
    std::ostream& info = a.output.empty() ? std::cerr : std::cout;
    info << summary_line(inst, out);
    if (a.trace) info << trace.render();
    if (!rep.valid) {
        info << "output schedule is INVALID\n";
        return Invalid;
    }
    if (a.trace && !trace.all_hold()) return Invalid;
    return Ok;
}

int run_validate(const std::string& inst_path, const std::string& sched_path, bool extra) {
    const std::string text = load(inst_path);
    Schedule s = parsed(sched_path, [](const std::string& t) { return parse_schedule(t); });
    ValidationReport rep;
    bool multires = parsed(inst_path, [](const std::string& t) { return is_multires_text(t); });
    std::map<JobId, std::string> names;
    try {
        if (multires) {
            auto inst = parse_multires(text);
            for (auto& j : inst.jobs) names[j.id] = j.name;
            rep = validate(inst, s);
        } else {
            rep = validate(parse_instance(text, true), s, extra);
        }
    } catch (const ParseError& e) {
        throw Failure{Parse, inst_path + ":" + e.what()};
    } catch (const StructuralError& e) {
        throw Failure{Parse, std::string("structural error: ") + e.what()};
    }
    auto name = [&](JobId j) {
        auto it = names.find(j);
        return it != names.end() && !it->second.empty() ? it->second : "job " + std::to_string(j);
    };
    std::cout << (rep.valid ? "valid" : "invalid") << "\nmakespan " << to_string(rep.makespan) << "\n";
    for (auto& v : rep.violations) {
        std::cout << to_string(v.kind) << ": " << name(v.a);
        if (v.b >= 0) std::cout << " / " << name(v.b);
        std::cout << "\n";
    }
    return rep.valid ? Ok : Invalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"msrs: makespan scheduling where every job locks one shared resource"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto add_solve_opts = [&](CLI::App* c, bool choose_alg) {
        c->add_option("instance", sa.instance, "instance JSON")->required();
        c->add_option("-o,--output", sa.output, "schedule output path (default stdout)");
        if (choose_alg)
            c->add_option("-a,--algorithm", sa.algorithm, "a53, a32, eptas or exact")
                ->check(CLI::IsMember({"a53", "a32", "eptas", "exact"}));
        c->add_option("--epsilon", sa.epsilon, "eptas accuracy, exact rational in (0, 1/2]");
        c->add_option("--mode", sa.mode, "eptas mode")->check(CLI::IsMember({"fixed-m", "augmented"}));
        c->add_option("--config-cap", sa.config_cap, "eptas cap on the configuration count (0 = none)");
        c->add_option("--ip-nodes", sa.ip_nodes, "eptas layer-IP node budget");
        c->add_flag("--no-compact", sa.no_compact, "skip the eptas left-shift pass");
        c->add_option("--max-nodes", sa.max_nodes, "exact search node budget");
        c->add_option("--time-ms", sa.time_ms, "exact search time budget in ms (0 = none)");
        c->add_flag("--allow-zero", sa.allow_zero, "accept zero processing times");
    };
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
    add_solve_opts(solve_cmd, true);
    solve_cmd->add_flag("--trace", sa.trace, "print the step-claim checks (a53, a32)");
    auto* eptas_cmd = app.add_subcommand("eptas", "solve with the approximation scheme");
    add_solve_opts(eptas_cmd, false);

    std::string v_inst, v_sched;
    bool v_extra = false;
    auto* validate_cmd = app.add_subcommand("validate", "check a schedule against an instance");
    validate_cmd->add_option("instance", v_inst)->required();
    validate_cmd->add_option("schedule", v_sched)->required();
    validate_cmd->add_flag("--allow-extra-machines", v_extra, "accept machine indices >= m");

    GeneratorSpec gs;
    std::string g_out;
    int g_count = 1;
    auto add_gen_opts = [&](CLI::App* c) {
        c->add_option("--seed", gs.seed);
        c->add_option("--profile", gs.profile)->check(CLI::IsMember(generator_profiles()));
        c->add_option("--m-min", gs.m_min);
        c->add_option("--m-max", gs.m_max);
        c->add_option("--classes-min", gs.classes_min);
        c->add_option("--classes-max", gs.classes_max);
        c->add_option("--class-size-min", gs.class_size_min);
        c->add_option("--class-size-max", gs.class_size_max);
        c->add_option("--p-min", gs.p_min);
        c->add_option("--p-max", gs.p_max);
        c->add_option("--max-jobs", gs.max_jobs);
    };
    auto* gen_cmd = app.add_subcommand("generate", "generate random instances");
    add_gen_opts(gen_cmd);
    gen_cmd->add_option("-o,--output", g_out, "output file, or directory when --count > 1");
    gen_cmd->add_option("--count", g_count)->check(CLI::PositiveNumber);

    BenchOptions bo;
    std::vector<std::string> b_algs{"a53", "a32"};
    int b_count = 50;
    bool b_no_rows = false;
    std::string b_eps = "1/2", b_mode = "augmented";
    auto* bench_cmd = app.add_subcommand("bench", "run algorithms over a generated batch");
    add_gen_opts(bench_cmd);
    bench_cmd->add_option("--count", b_count)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--algorithms", b_algs)->delimiter(',')->check(CLI::IsMember({"a53", "a32", "eptas", "exact"}));
    bench_cmd->add_option("--oracle-jobs", bo.oracle_max_jobs, "run the oracle up to this many jobs");
    bench_cmd->add_option("--oracle-ms", bo.oracle_ms, "oracle time budget per instance");
    bench_cmd->add_option("--threads", bo.threads);
    bench_cmd->add_option("--epsilon", b_eps);
    bench_cmd->add_option("--mode", b_mode)->check(CLI::IsMember({"fixed-m", "augmented"}));
    bench_cmd->add_flag("--no-rows", b_no_rows, "print only the summary");

    std::string gt_inst, gt_sched, gt_out, gt_T, gt_ratio, gt_title;
    auto* gantt_cmd = app.add_subcommand("gantt", "render a schedule as SVG");
    gantt_cmd->add_option("instance", gt_inst)->required();
    gantt_cmd->add_option("schedule", gt_sched)->required();
    gantt_cmd->add_option("-o,--output", gt_out);
    gantt_cmd->add_option("--T", gt_T, "draw a marker at T");
    gantt_cmd->add_option("--ratio", gt_ratio, "draw a second marker at ratio * T");
    gantt_cmd->add_option("--title", gt_title);

    std::string r_formula, r_out;
    bool r_verify = false;
    std::int64_t r_nodes = SearchLimits{}.max_nodes, r_ms = 0;
    auto* reduce_cmd = app.add_subcommand("reduce", "build the hardness gadget instance for a formula");
    reduce_cmd->add_option("formula", r_formula)->required();
    reduce_cmd->add_option("-o,--output", r_out);
    reduce_cmd->add_flag("--verify", r_verify, "decide whether the optimum is 4 or 5");
    reduce_cmd->add_option("--max-nodes", r_nodes);
    reduce_cmd->add_option("--time-ms", r_ms);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Parse;
    }

    try {
        if (*solve_cmd) return run_solve(sa);
        if (*eptas_cmd) {
            sa.algorithm = "eptas";
            return run_solve(sa);
        }
        if (*validate_cmd) return run_validate(v_inst, v_sched, v_extra);
        if (*gen_cmd) {
            if (g_count == 1) {
                emit(g_out, write_instance(generate(gs)));
                return Ok;
            }
            if (g_out.empty()) throw Failure{Parse, "--count > 1 needs -o <directory>"};
            std::filesystem::create_directories(g_out);
            auto batch = generate_batch(gs, g_count);
            for (std::size_t i = 0; i < batch.size(); ++i)
                write_file((std::filesystem::path(g_out) / ("instance_" + std::to_string(gs.seed + i) + ".json")).string(),
                           write_instance(batch[i]));
            return Ok;
        }
        if (*bench_cmd) {
            bo.algorithms.clear();
            for (auto& s : b_algs) bo.algorithms.push_back(parse_algorithm(s));
            bo.solve.epsilon = parse_epsilon(b_eps);
            bo.solve.mode = parse_mode(b_mode);
            BenchReport rep = run_bench(generate_batch(gs, b_count), bo);
            std::cout << render_bench(rep, !b_no_rows);
            for (auto& s : rep.summary)
                if (s.violations) return Invalid;
            return Ok;
        }
        if (*gantt_cmd) {
            const std::string text = load(gt_inst);
            Schedule s = parsed(gt_sched, [](const std::string& t) { return parse_schedule(t); });
            GanttOptions go;
            go.title = gt_title;
            if (!gt_T.empty()) go.T = parse_rat(gt_T);
            if (!gt_ratio.empty()) go.ratio = parse_rat(gt_ratio);
            std::string svg;
            try {
                if (is_multires_text(text))
                    svg = render_gantt(parse_multires(text), s, go);
                else
                    svg = render_gantt(parse_instance(text, true), s, go);
            } catch (const ParseError& e) {
                throw Failure{Parse, gt_inst + ":" + e.what()};
            } catch (const StructuralError& e) {
                throw Failure{Parse, std::string("structural error: ") + e.what()};
            } catch (const ContractError& e) {
                throw Failure{Invalid, e.what()};
            }
            emit(gt_out, svg);
            return Ok;
        }
        if (*reduce_cmd) {
            Formula322 f = parsed(r_formula, [](const std::string& t) { return parse_formula(t); });
            if (auto p = formula_problem(f); !p.empty()) throw Failure{Parse, "illegal formula: " + p};
            auto [inst, g] = reduce(f);
            emit(r_out, write_multires(inst));
            std::ostream& info = r_out.empty() ? std::cerr : std::cout;
            info << "machines " << inst.m << " jobs " << inst.jobs.size() << " resources " << inst.resource_names.size()
                 << "\n";
            if (r_verify) {
                SearchLimits lim;
                lim.max_nodes = r_nodes;
                lim.time_budget = std::chrono::milliseconds(r_ms);
                GapResult gr = verify_gap(f, lim);
                info << "verdict " << to_string(gr.verdict) << "\n" << gr.detail << "\n";
                if (gr.witness) {
                    info << "witness";
                    for (int v = 0; v < f.vars; ++v) info << " x" << v + 1 << "=" << ((*gr.witness)[v] ? 1 : 0);
                    info << "\n";
                }
                if (gr.verdict == GapVerdict::Inconclusive) return Budget;
            }
            return Ok;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Parse;
    } catch (const SizeBudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Budget;
    } catch (const SearchBudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Budget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Parse;
    }
    return Ok;
}
