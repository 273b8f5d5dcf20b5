#include "doctest.h"
#include "oracles.hpp"

#include "msrs/bench.hpp"
#include "msrs/gantt.hpp"
#include "msrs/generate.hpp"
#include "msrs/hardness.hpp"
#include "msrs/io.hpp"
#include "msrs/solve.hpp"

#include <set>

using namespace msrs;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("instance text round trip") {
    Instance i = Instance::from_sizes(3, {{4, 2}, {7}, {1, 1, 1}});
    Instance back = parse_instance(write_instance(i));
    CHECK(back.m == 3);
    CHECK(back.sizes() == i.sizes());
    auto js = back.jobs();
    CHECK(js[0].id == 0);
    CHECK(js[2].id == 2);
    CHECK(js[2].class_id == 1);
}

TEST_CASE("instance parse errors") {
    try {
        parse_instance("{\"machines\": 2,\n \"classes\": [[1, 2],, [3]]}");
        FAIL("accepted bad syntax");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 0);
    }
    try {
        parse_instance(R"({"machines": 2, "classes": [[1], [2], [0]]})");
        FAIL("accepted a zero size");
    } catch (const ParseError& e) {
        CHECK(e.where == "classes[2][0]");
    }
    CHECK(parse_instance(R"({"machines": 2, "classes": [[1], [0]]})", true).zero_jobs.size() == 1);
    CHECK_THROWS_AS(parse_instance(R"({"machines": 2, "classes": [[1], []]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"machines": 0, "classes": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"classes": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"machines": 2, "classes": [[-3]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"machines": 2, "classes": [[1.5]]})"), ParseError);
}

TEST_CASE("schedule text keeps exact starts") {
    Schedule s;
    s.place(0, 1, Rat(7, 3));
    s.place(1, 0, 0);
    s.place(2, 2, Rat(5, 2));
    Schedule back = parse_schedule(write_schedule(s));
    CHECK(back.size() == 3);
    CHECK(back.at(0).start == Rat(7, 3));
    CHECK(back.at(0).machine == 1);
    CHECK(back.at(2).start == Rat(5, 2));
    Schedule big = parse_schedule(
        R"({"schedule": [{"job": 0, "machine": 0, "start_num": "123456789012345678901234567890", "start_den": "3"}]})");
    CHECK(big.at(0).start == parse_rat("41152263004115226300411522630"));
    CHECK_THROWS_AS(parse_schedule(R"({"schedule": [{"job": 0, "machine": 0, "start_num": 1, "start_den": 0}]})"),
                    ParseError);
}

TEST_CASE("formula and multi-resource text round trips") {
    Formula322 f{3, {{1, 2, 3}, {1, 2, 3}, {-1, -2, -3}, {-1, -2, -3}}};
    CHECK(parse_formula(write_formula(f)).clauses == f.clauses);
    auto [inst, g] = reduce(f);
    std::string text = write_multires(inst);
    CHECK(is_multires_text(text));
    CHECK_FALSE(is_multires_text(write_instance(Instance::from_sizes(1, {{1}}))));
    auto back = parse_multires(text);
    CHECK(back.m == inst.m);
    REQUIRE(back.jobs.size() == inst.jobs.size());
    for (std::size_t k = 0; k < inst.jobs.size(); ++k) {
        CHECK(back.jobs[k].p == inst.jobs[k].p);
        std::set<std::string> a, b;
        for (int r : inst.jobs[k].resources) a.insert(inst.resource_names[r]);
        for (int r : back.jobs[k].resources) b.insert(back.resource_names[r]);
        CHECK(a == b);
    }
}

TEST_CASE("generator is deterministic and respects its ranges") {
    for (auto& profile : generator_profiles()) {
        GeneratorSpec spec;
        spec.seed = 17;
        spec.profile = profile;
        auto batch = generate_batch(spec, 100);
        auto again = generate_batch(spec, 100);
        for (std::size_t k = 0; k < batch.size(); ++k) {
            CHECK(batch[k].sizes() == again[k].sizes());
            CHECK(batch[k].m == again[k].m);
            CHECK(batch[k].num_jobs() <= spec.max_jobs);
            CHECK(batch[k].num_jobs() >= 1);
            CHECK(batch[k].m >= spec.m_min);
            CHECK(batch[k].m <= spec.m_max);
            for (auto& j : batch[k].jobs()) {
                CHECK(j.p >= spec.p_min);
                CHECK(j.p <= spec.p_max);
            }
        }
        spec.seed = 18;
        CHECK(generate(spec).sizes() == batch[1].sizes());
    }
    GeneratorSpec bad;
    bad.profile = "nope";
    CHECK_THROWS_AS(generate(bad), ContractError);
}

TEST_CASE("solve front end") {
    Instance i = Instance::from_sizes(2, {{6}, {3, 3}, {2, 2, 2}});
    for (auto a : {Algorithm::A53, Algorithm::A32, Algorithm::Eptas, Algorithm::Exact}) {
        auto out = solve(a, i);
        CHECK(out.ok);
        CHECK(oracle::valid_complete(i, out.schedule, a == Algorithm::Eptas));
        CHECK(out.makespan <= out.guarantee * out.T);
        CHECK(parse_algorithm(to_string(a)) == a);
    }
    CHECK(solve(Algorithm::Exact, i).makespan == 9);
    CHECK(solve(Algorithm::A53, i).makespan <= 15);
    CHECK_THROWS_AS(parse_algorithm("a54"), ContractError);
}

TEST_CASE("gantt output") {
    Instance i = Instance::from_sizes(3, {{4, 2}, {3}, {1}});
    auto out = solve(Algorithm::A32, i);
    GanttOptions o;
    o.T = out.T;
    o.ratio = Rat(3, 2);
    o.title = "a32";
    std::string svg = render_gantt(i, out.schedule, o);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count_of(svg, "class=\"lane\"") == 3);
    CHECK(count_of(svg, "class=\"job\"") == 4);
    CHECK(count_of(svg, "class=\"marker\"") == 2);
    CHECK(svg.find("a32") != std::string::npos);

    Schedule bad = out.schedule;
    bad.place(1, bad.at(0).machine, bad.at(0).start);
    CHECK_THROWS_AS(render_gantt(i, bad, o), ContractError);
}

TEST_CASE("bench harness") {
    GeneratorSpec spec;
    spec.seed = 5;
    spec.max_jobs = 8;
    auto batch = generate_batch(spec, 12);
    BenchOptions o;
    o.algorithms = {Algorithm::A53, Algorithm::A32, Algorithm::Eptas};
    o.threads = 2;
    auto rep = run_bench(batch, o);
    CHECK(rep.rows.size() == 36);
    CHECK(rep.summary.size() == 3);
    for (auto& r : rep.rows) {
        CHECK(r.status == "ok");
        CHECK(r.within_guarantee);
        REQUIRE(r.ratio_opt);
        CHECK(*r.ratio_opt >= 1);
    }
    for (auto& s : rep.summary) CHECK(s.violations == 0);
    for (std::size_t k = 1; k < rep.rows.size(); ++k)
        CHECK(std::make_pair(rep.rows[k - 1].instance, static_cast<int>(rep.rows[k - 1].algorithm)) <
              std::make_pair(rep.rows[k].instance, static_cast<int>(rep.rows[k].algorithm)));
    CHECK(render_bench(rep, false).find("a32") != std::string::npos);
}
