#include "doctest.h"
#include "oracles.hpp"

#include "msrs/bounds.hpp"
#include "msrs/exact.hpp"

#include <functional>

using namespace msrs;

namespace {

// Start-time tuples on the integer grid. Intervals with at most m overlapping at every
// point can always be put on m machines, so machines need not be enumerated.
bool naive_feasible(const Instance& inst, std::int64_t K) {
    std::vector<Job> js = inst.jobs();
    std::size_t n = js.size();
    std::vector<std::int64_t> st(n);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == n) {
            for (std::int64_t t = 0; t < K; ++t) {
                int busy = 0;
                for (std::size_t a = 0; a < n; ++a) busy += st[a] <= t && t < st[a] + js[a].p;
                if (busy > inst.m) return false;
            }
            return true;
        }
        for (std::int64_t s = 0; s + js[i].p <= K; ++s) {
            bool ok = true;
            for (std::size_t a = 0; a < i && ok; ++a)
                if (js[a].class_id == js[i].class_id && s < st[a] + js[a].p && st[a] < s + js[i].p) ok = false;
            if (!ok) continue;
            st[i] = s;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

std::int64_t naive_opt(const Instance& inst) {
    for (std::int64_t K = 0;; ++K)
        if (naive_feasible(inst, K)) return K;
}

}  // namespace

TEST_CASE("decide_makespan examples") {
    auto r = decide_makespan(Instance::from_sizes(2, {{2}, {2}}), 2);
    CHECK(r.status == ExactStatus::Optimal);
    CHECK(r.makespan == 2);

    r = decide_makespan(Instance::from_sizes(2, {{2, 2}}), 2);
    CHECK(r.status == ExactStatus::InfeasibleAtBound);

    Instance i = Instance::from_sizes(2, {{3}, {3}, {2}, {2}});
    r = decide_makespan(i, 5);
    CHECK(r.status == ExactStatus::Optimal);
    CHECK(r.makespan == 5);
    CHECK(oracle::valid_complete(i, r.schedule));
    CHECK(decide_makespan(i, 4).status == ExactStatus::InfeasibleAtBound);
}

TEST_CASE("solve_exact examples") {
    CHECK(solve_exact(Instance::from_sizes(1, {{1, 2, 3}})).makespan == 6);
    CHECK(solve_exact(Instance::from_sizes(3, {{2}, {2}, {2}})).makespan == 2);
    CHECK(solve_exact(Instance::from_sizes(2, {{4}, {3}, {3}, {2}})).makespan == 6);
    CHECK(solve_exact(Instance::from_sizes(2, {{5}, {1}, {1}, {1}})).makespan == 5);
    CHECK(solve_exact(Instance::from_sizes(2, {{4}, {4}, {4}, {1}})).makespan >= 8);
}

TEST_CASE("budget exhaustion is reported, not conflated with infeasibility") {
    Instance i = Instance::from_sizes(3, {{5, 4}, {4, 3}, {3, 3}, {2, 2}, {2, 1}});
    SearchLimits lim;
    lim.max_nodes = 1;
    auto r = decide_makespan(i, 12, lim);
    CHECK(r.status == ExactStatus::BudgetExhausted);
    auto s = solve_exact(i, lim);
    CHECK(s.status == ExactStatus::BudgetExhausted);
    CHECK(s.lower <= s.upper);
    CHECK(s.lower >= 10);
    CHECK(decide_makespan(i, 9, lim).status == ExactStatus::InfeasibleAtBound);  // below the load bound
}

TEST_CASE("solve_exact matches the grid enumerator on tiny instances") {
    oracle::Gen g(81);
    for (int it = 0; it < 120; ++it) {
        int m = static_cast<int>(g.uni(1, 3));
        Instance inst = g.instance(m, static_cast<int>(g.uni(1, 5)), 4);
        if (inst.total() > 12) continue;
        CAPTURE(inst.sizes());
        auto r = solve_exact(inst);
        REQUIRE(r.status == ExactStatus::Optimal);
        CHECK(r.makespan == naive_opt(inst));
        CHECK(oracle::valid_complete(inst, r.schedule));
        CHECK(makespan(inst, r.schedule) == r.makespan);
    }
}

TEST_CASE("solve_exact matches the order enumerator up to 8 jobs") {
    oracle::Gen g(82);
    for (int it = 0; it < 80; ++it) {
        int m = static_cast<int>(g.uni(2, 4));
        Instance inst = g.instance(m, static_cast<int>(g.uni(2, 8)), 6);
        if (inst.total() > 24) continue;
        CAPTURE(inst.sizes());
        auto r = solve_exact(inst);
        REQUIRE(r.status == ExactStatus::Optimal);
        CHECK(r.makespan == oracle::brute_opt(inst));
        CHECK(Rat(r.makespan) >= lower_bound_basic(inst));
    }
}

TEST_CASE("decide_makespan is monotone in K") {
    oracle::Gen g(83);
    for (int it = 0; it < 60; ++it) {
        Instance inst = g.instance(static_cast<int>(g.uni(2, 3)), static_cast<int>(g.uni(2, 7)), 5);
        bool prev = false;
        for (std::int64_t K = 0; K <= inst.total(); ++K) {
            bool f = decide_makespan(inst, K).status == ExactStatus::Optimal;
            CHECK((!prev || f));
            prev = f;
        }
        CHECK(prev);
    }
}

TEST_CASE("multi-resource conflicts") {
    MultiResourceInstance mr;
    mr.m = 3;
    int r0 = mr.resource_id("r0"), r1 = mr.resource_id("r1"), r2 = mr.resource_id("r2");
    mr.jobs = {{0, 2, {r0, r1}, "a"}, {1, 2, {r1, r2}, "b"}, {2, 2, {r2}, "c"}, {3, 2, {r0}, "d"}};
    auto r = solve_exact(mr);
    REQUIRE(r.status == ExactStatus::Optimal);
    CHECK(r.makespan == 4);
    CHECK(r.makespan == oracle::brute_opt(mr));
    CHECK(validate(mr, r.schedule).valid);

    Schedule ls = list_schedule(mr);
    CHECK(validate(mr, ls).valid);
}

TEST_CASE("multi-resource agrees with the order enumerator") {
    oracle::Gen g(84);
    for (int it = 0; it < 60; ++it) {
        MultiResourceInstance mr;
        mr.m = static_cast<int>(g.uni(2, 3));
        int nr = static_cast<int>(g.uni(2, 4));
        for (int k = 0; k < nr; ++k) mr.resource_id("r" + std::to_string(k));
        int n = static_cast<int>(g.uni(2, 7));
        for (int j = 0; j < n; ++j) {
            std::vector<int> res;
            for (int k = 0; k < nr; ++k)
                if (g.uni(0, 2) == 0) res.push_back(k);
            if (res.empty()) res.push_back(static_cast<int>(g.uni(0, nr - 1)));
            mr.jobs.push_back({j, g.uni(1, 4), res, "j" + std::to_string(j)});
        }
        auto r = solve_exact(mr);
        REQUIRE(r.status == ExactStatus::Optimal);
        CHECK(r.makespan == oracle::brute_opt(mr));
        CHECK(validate(mr, r.schedule).valid);
    }
}
