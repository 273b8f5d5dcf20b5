#include "doctest.h"
#include "oracles.hpp"

#include "msrs/approx53.hpp"
#include "msrs/bounds.hpp"

using namespace msrs;

namespace {

std::vector<Job> jobs_of(const std::vector<std::int64_t>& ps) {
    std::vector<Job> out;
    for (std::size_t i = 0; i < ps.size(); ++i) out.push_back({static_cast<JobId>(i), 0, ps[i]});
    return out;
}

std::vector<std::int64_t> sizes(const std::vector<Job>& js) {
    std::vector<std::int64_t> out;
    for (auto& j : js) out.push_back(j.p);
    return out;
}

void check_split_bounds(const std::vector<Job>& c, const SplitResult& r, const Rat& T) {
    CHECK(r.c1.size() + r.c2.size() == c.size());
    Rat p1 = total_of(r.c1), p2 = total_of(r.c2);
    CHECK(3 * p1 >= T);
    CHECK(3 * p1 <= 2 * T);
    CHECK(3 * p2 <= 2 * T);
}

}  // namespace

TEST_CASE("split_large_class examples") {
    auto c = jobs_of({4, 3});
    auto r = split_large_class(c, 10);
    CHECK(sizes(r.c1) == std::vector<std::int64_t>{4});
    CHECK(sizes(r.c2) == std::vector<std::int64_t>{3});

    c = jobs_of({3, 3, 3});
    r = split_large_class(c, 12);
    CHECK(sizes(r.c1) == std::vector<std::int64_t>{3, 3});
    CHECK(sizes(r.c2) == std::vector<std::int64_t>{3});

    c = jobs_of({2, 2, 1});
    r = split_large_class(c, 6);
    CHECK(sizes(r.c1) == std::vector<std::int64_t>{2});
    CHECK(sizes(r.c2) == std::vector<std::int64_t>{2, 1});
    check_split_bounds(c, r, 6);
}

TEST_CASE("split_large_class contracts") {
    CHECK_THROWS_AS(split_large_class(jobs_of({2, 2}), 6), ContractError);     // p(c) = 2/3 T
    CHECK_THROWS_AS(split_large_class(jobs_of({4, 3, 1}), 7), ContractError);  // p(c) > T
    CHECK_THROWS_AS(split_large_class(jobs_of({4, 3}), 7), ContractError);     // job > T/2
}

TEST_CASE("split_large_class bounds over random classes") {
    oracle::Gen g(53);
    int tried = 0;
    for (int it = 0; it < 2000; ++it) {
        std::int64_t T = g.uni(3, 30);
        std::vector<std::int64_t> ps;
        std::int64_t sum = 0;
        while (3 * sum <= 2 * T) {
            std::int64_t p = g.uni(1, T / 2);
            if (sum + p > T) break;
            ps.push_back(p);
            sum += p;
        }
        if (3 * sum <= 2 * T) continue;
        ++tried;
        auto c = jobs_of(ps);
        check_split_bounds(c, split_large_class(c, T), T);
    }
    CHECK(tried > 500);
}

TEST_CASE("schedule_53 examples") {
    Instance three = Instance::from_sizes(3, {{9}, {9}, {9}});
    Schedule s = schedule_53(three);
    CHECK(validate(three, s).valid);
    CHECK(makespan(three, s) == 9);

    Instance i = Instance::from_sizes(2, {{6}, {3, 3}, {2, 2, 2}});
    CHECK(select_T_53(i) == 9);
    s = schedule_53(i);
    CHECK(oracle::valid_complete(i, s));
    CHECK(makespan(i, s) <= 15);
    CHECK(makespan(i, s) <= Rat(5, 3) * oracle::brute_opt(i));

    Instance single = Instance::from_sizes(1, {{5, 3}, {2}});
    s = schedule_53(single);
    CHECK(oracle::valid_complete(single, s));
    CHECK(makespan(single, s) == 10);
}

TEST_CASE("schedule_53 claim trace") {
    Instance i = Instance::from_sizes(2, {{4, 4}, {4}, {3, 2}, {1, 1}, {2}});
    Trace t;
    Schedule s = schedule_53(i, &t);
    CHECK(oracle::valid_complete(i, s));
    CHECK(t.all_hold());
    CHECK_FALSE(t.checks.empty());
}

TEST_CASE("schedule_53 fuzz: valid and within 5/3 T") {
    oracle::Gen g(5353);
    for (int it = 0; it < 200; ++it) {
        int m = static_cast<int>(g.uni(2, 6));
        Instance inst = g.instance(m, static_cast<int>(g.uni(1, 12)), 8);
        Trace t;
        Schedule s = schedule_53(inst, &t);
        CAPTURE(inst.sizes());
        CHECK(oracle::valid_complete(inst, s));
        CHECK(makespan(inst, s) <= Rat(5, 3) * select_T_53(inst));
        CHECK(t.all_hold());
    }
}

TEST_CASE("schedule_53 against the brute-force optimum") {
    oracle::Gen g(99);
    for (int it = 0; it < 60; ++it) {
        int m = static_cast<int>(g.uni(2, 3));
        Instance inst = g.instance(m, static_cast<int>(g.uni(2, 6)), 6);
        Schedule s = schedule_53(inst);
        CAPTURE(inst.sizes());
        CHECK(makespan(inst, s) <= Rat(5, 3) * oracle::brute_opt(inst));
    }
}
