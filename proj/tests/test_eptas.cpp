#include "doctest.h"
#include "oracles.hpp"

#include "msrs/bounds.hpp"
#include "msrs/eptas.hpp"
#include "msrs/exact.hpp"
#include "msrs/flow.hpp"

#include <set>

using namespace msrs;

namespace {

const Rat half(1, 2);

// all-pairs overlap check on an arbitrary subset of jobs
bool disjoint(const Schedule& s, const std::vector<Job>& jobs) {
    for (std::size_t a = 0; a < jobs.size(); ++a)
        for (std::size_t b = a + 1; b < jobs.size(); ++b) {
            auto &pa = s.at(jobs[a].id), &pb = s.at(jobs[b].id);
            bool overlap = pa.start < pb.start + jobs[b].p && pb.start < pa.start + jobs[a].p;
            if (overlap && (pa.machine == pb.machine || jobs[a].class_id == jobs[b].class_id)) return false;
        }
    return true;
}

std::map<int, std::vector<JobId>> ids(const JobPool& pool) {
    std::map<int, std::vector<JobId>> out;
    for (auto& [c, js] : pool)
        for (auto& j : js) out[c].push_back(j.id);
    return out;
}

LayeredModel model_of(const std::vector<std::pair<int, int>>& jobs, int layers) {
    LayeredModel md;
    md.xi = 1;
    md.layers = layers;
    std::set<int> lens;
    for (auto [c, len] : jobs) {
        md.jobs.push_back({c, len, -1});
        md.counts[{c, len}]++;
        lens.insert(len);
    }
    md.P.assign(lens.begin(), lens.end());
    return md;
}

// direct recomputation of both band sums
std::pair<Rat, Rat> band_sums(const Instance& inst, const Rat& eps, const Rat& T, const Rat& d) {
    Rat mu = eps * eps * d, med = 0, light = 0;
    for (auto& cls : inst.classes) {
        Rat ps = 0;
        for (auto& j : cls) {
            if (mu * T < j.p && Rat(j.p) <= d * T) med += j.p;
            if (Rat(j.p) <= mu * T) ps += j.p;
        }
        if (mu * T < ps && ps <= d * T) light += ps;
    }
    return {med, light};
}

}  // namespace

TEST_CASE("epsilon domain and mode names") {
    CHECK_THROWS_AS(EptasParams::make(0, EptasMode::FixedM, 1, half), ContractError);
    CHECK_THROWS_AS(EptasParams::make(Rat(3, 5), EptasMode::FixedM, 1, half), ContractError);
    CHECK(EptasParams::make(Rat(1, 3), EptasMode::FixedM, 9, Rat(1, 3)).mu == Rat(1, 27));
    CHECK(parse_mode("fixed-m") == EptasMode::FixedM);
    CHECK(to_string(parse_mode("augmented")) == "augmented");
    CHECK_THROWS_AS(parse_mode("fixed"), ContractError);
}

TEST_CASE("delta candidates") {
    auto f = delta_candidates(half, 3, EptasMode::FixedM);
    CHECK(f.size() == 12);
    CHECK(f.front() == half);
    CHECK(f.back() == Rat(1, 4096));
    auto a = delta_candidates(Rat(1, 3), 3, EptasMode::Augmented);
    CHECK(a.size() == 18);
    CHECK(a[2] == Rat(1, 27));
}

TEST_CASE("choose_delta examples") {
    CHECK(choose_delta(Instance::from_sizes(2, {{10}, {10}}), half, 10, EptasMode::FixedM) == half);
    // two jobs of 6 in (2, 8] at delta 1/2 exceed eps T = 8; at 1/4 the band (1, 4] is empty
    Instance i = Instance::from_sizes(2, {{6}, {6}, {16}});
    CHECK(choose_delta(i, half, 16, EptasMode::FixedM) == Rat(1, 4));
    auto [m1, l1] = band_sums(i, half, 16, half);
    CHECK(m1 == 12);
    CHECK(l1 == 0);
}

TEST_CASE("choose_delta is the first candidate meeting both conditions") {
    oracle::Gen g(90);
    for (int it = 0; it < 200; ++it) {
        Instance inst = g.instance(static_cast<int>(g.uni(2, 6)), static_cast<int>(g.uni(1, 16)), 40);
        Rat T = std::max(lower_bound_basic(inst), Rat(1));
        for (auto mode : {EptasMode::FixedM, EptasMode::Augmented}) {
            for (Rat eps : {half, Rat(1, 3)}) {
                Rat bound = mode == EptasMode::FixedM ? eps * T : eps * eps * inst.m * T;
                Rat d = choose_delta(inst, eps, T, mode);
                auto [med, light] = band_sums(inst, eps, T, d);
                CHECK(med <= bound);
                CHECK(light <= bound);
                auto ds = delta_sums(inst, eps, T, d);
                CHECK(ds.medium == med);
                CHECK(ds.light_small == light);
                for (Rat e = eps; e > d; e *= eps) {
                    auto [m2, l2] = band_sums(inst, eps, T, e);
                    CHECK((m2 > bound || l2 > bound));
                }
            }
        }
    }
}

TEST_CASE("remove_medium") {
    auto p = EptasParams::make(half, EptasMode::Augmented, 16, half);  // medium band (2, 8]
    Instance none = Instance::from_sizes(4, {{16}, {1, 1}});
    auto [pool0, tr0] = remove_medium(none, p);
    CHECK(ids(pool0) == ids(pool_of(none)));
    CHECK(tr0.medium.empty());
    CHECK(tr0.removed_classes.empty());

    Instance i = Instance::from_sizes(4, {{3, 3, 3}, {3, 12}, {1}});
    auto [pool, tr] = remove_medium(i, p);
    CHECK(tr.removed_classes.count(0) == 1);
    CHECK(tr.class_mass == 9);
    CHECK(tr.medium.at(1).size() == 1);
    CHECK(tr.medium_mass == 3);
    CHECK(pool.count(0) == 0);
    CHECK(pool.at(1).size() == 1);
    CHECK(pool.at(2).size() == 1);

    auto pf = EptasParams::make(half, EptasMode::FixedM, 16, half);
    auto [poolf, trf] = remove_medium(i, pf);
    CHECK(trf.removed_classes.empty());
    CHECK(trf.medium_mass == 12);
    CHECK(poolf.count(0) == 0);
}

TEST_CASE("remove_medium and remove_small_light mass accounting") {
    oracle::Gen g(91);
    for (int it = 0; it < 200; ++it) {
        Instance inst = g.instance(static_cast<int>(g.uni(2, 8)), static_cast<int>(g.uni(1, 16)), 30);
        Rat T = ceil_of(lower_bound_basic(inst));
        auto mode = it % 2 ? EptasMode::FixedM : EptasMode::Augmented;
        Rat d = choose_delta(inst, half, T, mode);
        auto p = EptasParams::make(half, mode, T, d);
        auto [pool, mt] = remove_medium(inst, p);
        if (mode == EptasMode::Augmented) CHECK(mt.medium_mass <= half * half * inst.m * T);
        else CHECK(mt.medium_mass <= half * T);
        CHECK(Rat(static_cast<std::int64_t>(mt.removed_classes.size())) <= half * inst.m);
        auto [pool2, st] = remove_small_light(pool, p);
        Rat light = 0;
        for (auto* side : {&st.light, &st.tiny})
            for (auto& [c, js] : *side)
                for (auto& j : js) {
                    light += j.p;
                    CHECK(Rat(j.p) <= p.mu * T);
                }
        CHECK(light == st.L);
        Rat before = 0, after = 0;
        for (auto& [c, js] : pool)
            for (auto& j : js) before += j.p;
        for (auto& [c, js] : pool2)
            for (auto& j : js) after += j.p;
        CHECK(before == after + st.L);
        CHECK(Rat(inst.total()) == before + mt.medium_mass + mt.class_mass);
    }
}

TEST_CASE("remove_small_light examples") {
    auto p = EptasParams::make(half, EptasMode::FixedM, 16, half);  // small <= 2, light <= 8
    JobPool pool = pool_of(Instance::from_sizes(2, {{16}, {12}}));
    auto [same, t0] = remove_small_light(pool, p);
    CHECK(ids(same) == ids(pool));
    CHECK(t0.L == 0);

    JobPool p2 = pool_of(Instance::from_sizes(2, {{1, 1, 2}, {1, 1}, {2, 2, 2, 2, 2}, {12, 1}}));
    auto [out, tr] = remove_small_light(p2, p);
    CHECK(out.count(0) == 0);
    CHECK(tr.light.at(0).size() == 3);
    CHECK(tr.tiny.at(1).size() == 2);
    CHECK(out.at(2).size() == 5);
    CHECK(out.at(3).size() == 1);
    CHECK(tr.tiny.at(3).size() == 1);
    CHECK(tr.L == 7);
}

TEST_CASE("round_and_layer examples") {
    auto p = EptasParams::make(half, EptasMode::FixedM, 40, half);  // xi = 10, small <= 5, big > 20
    JobPool pool = pool_of(Instance::from_sizes(1, {{30}, {5, 5, 5, 5, 2}, {21}}));
    auto [md, tr] = round_and_layer(pool, p);
    CHECK(md.xi == 10);
    CHECK(md.layers == 8);
    CHECK(tr.rounded.at(0) == 3);  // 30 is already a multiple of xi
    CHECK(tr.rounded.at(6) == 3);
    CHECK(tr.placeholders.at(1) == 3);  // 22 = 2.2 xi
    CHECK(md.P == std::vector<int>{1, 3});
    CHECK(md.counts.at({1, 1}) == 3);
    CHECK(md.num_windows() == 8 + 6);
    CHECK(md.count_configurations(1000) > 0);

    CHECK_THROWS_AS(round_and_layer(pool_of(Instance::from_sizes(1, {{10}})), p), ContractError);
}

TEST_CASE("round_and_layer: placeholder mass and rounding re-checked") {
    oracle::Gen g(92);
    for (int it = 0; it < 200; ++it) {
        Instance inst = g.instance(static_cast<int>(g.uni(2, 6)), static_cast<int>(g.uni(1, 16)), 30);
        Rat T = ceil_of(lower_bound_basic(inst));
        auto p = EptasParams::make(half, EptasMode::FixedM, T, choose_delta(inst, half, T, EptasMode::FixedM));
        auto [pool, mt] = remove_medium(inst, p);
        auto [pool2, st] = remove_small_light(pool, p);
        auto [md, tr] = round_and_layer(pool2, p);
        for (auto& [c, n] : tr.placeholders) {
            Rat ps = 0;
            for (auto& j : tr.placeholder_small.at(c)) ps += j.p;
            CHECK(ps <= n * md.xi);
            CHECK(n * md.xi < ps + md.xi);
        }
        for (auto& [id, len] : tr.rounded) {
            Rat pj = tr.big.at(id).p;
            CHECK(pj <= len * md.xi);
            CHECK(len * md.xi < pj + md.xi);
        }
        CHECK(Rat(md.layers) * md.xi <= (1 + 2 * half) * T);
    }
}

TEST_CASE("solve_layer_ip examples") {
    auto one = model_of({{0, 4}}, 4);
    auto s = solve_layer_ip(one, 1);
    REQUIRE(s.feasible);
    CHECK(s.start[0] == 0);
    CHECK(ip_problem(one, 1, s).empty());

    auto two = model_of({{0, 1}, {0, 1}}, 1);
    CHECK_FALSE(solve_layer_ip(two, 2).feasible);

    auto three = model_of({{0, 2}, {1, 2}, {2, 1}, {2, 1}}, 2);
    auto t = solve_layer_ip(three, 3);
    REQUIRE(t.feasible);
    CHECK(ip_problem(three, 3, t).empty());
    int total = 0;
    for (auto& [conf, cnt] : t.x) total += cnt;
    CHECK(total == 3);

    CHECK_THROWS_AS(solve_layer_ip(model_of({{0, 1}, {1, 1}, {2, 1}, {3, 1}}, 4), 1, 1), SearchBudgetError);
}

TEST_CASE("ip_problem flags broken solutions") {
    auto md = model_of({{0, 1}, {1, 1}}, 2);
    auto s = solve_layer_ip(md, 2);
    REQUIRE(s.feasible);
    auto bad = s;
    bad.x.front().second += 1;
    CHECK_FALSE(ip_problem(md, 2, bad).empty());
    bad = s;
    bad.y.begin()->second += 1;
    CHECK_FALSE(ip_problem(md, 2, bad).empty());
}

TEST_CASE("solve_layer_ip agrees with the window enumerator") {
    oracle::Gen g(93);
    int feas = 0, infeas = 0;
    for (int it = 0; it < 400; ++it) {
        int layers = static_cast<int>(g.uni(1, 4));
        int m = static_cast<int>(g.uni(1, 3));
        int k = static_cast<int>(g.uni(1, 3));
        std::vector<std::pair<int, int>> jobs;
        for (int c = 0; c < k; ++c) {
            int n = static_cast<int>(g.uni(1, 3));
            for (int i = 0; i < n; ++i) jobs.push_back({c, static_cast<int>(g.uni(1, layers))});
        }
        auto md = model_of(jobs, layers);
        auto s = solve_layer_ip(md, m);
        bool ref = oracle::layered_feasible(jobs, layers, m);
        CHECK(s.feasible == ref);
        if (s.feasible) CHECK(ip_problem(md, m, s).empty());
        (ref ? feas : infeas)++;
    }
    CHECK(feas > 50);
    CHECK(infeas > 50);
}

TEST_CASE("integralize_small_placement examples") {
    FractionalPlacement a{{{1, 0}, {0, 1}}, {1, 1}, {1, 1}};
    auto r = integralize_small_placement(a);
    CHECK(r.value == 2);
    CHECK(r.x == std::vector<std::vector<int>>{{1, 0}, {0, 1}});

    FractionalPlacement b{{{1, 1}}, {1, 1}, {2}};
    r = integralize_small_placement(b);
    CHECK(r.x == std::vector<std::vector<int>>{{1, 1}});

    FractionalPlacement c{{{half, half}, {half, half}}, {1, 1}, {1, 1}};
    r = integralize_small_placement(c);
    CHECK(r.value == 2);
    CHECK(r.x[0][0] + r.x[1][0] == 1);

    FractionalPlacement over{{{1}, {1}}, {1}, {1, 1}};
    CHECK_THROWS_AS(integralize_small_placement(over), ContractError);
    FractionalPlacement sum{{{half, 0}}, {1, 1}, {1}};
    CHECK_THROWS_AS(integralize_small_placement(sum), ContractError);
}

TEST_CASE("integralize_small_placement on random convex mixtures") {
    oracle::Gen g(94);
    for (int it = 0; it < 300; ++it) {
        int C = static_cast<int>(g.uni(1, 5)), L = static_cast<int>(g.uni(1, 6));
        std::vector<std::int64_t> n(C);
        for (auto& v : n) v = g.uni(1, L);
        int r = static_cast<int>(g.uni(1, 3));
        FractionalPlacement fp;
        fp.n = n;
        fp.k.assign(L, 0);
        fp.frac.assign(C, std::vector<Rat>(L, 0));
        std::vector<Rat> w(r);
        Rat left = 1;
        for (int q = 0; q < r; ++q) {
            w[q] = q + 1 == r ? left : left * Rat(g.uni(1, 3), 4);
            left -= w[q];
        }
        for (int q = 0; q < r; ++q) {
            std::vector<std::int64_t> col(L, 0);
            for (int c = 0; c < C; ++c) {
                std::vector<int> ls(L);
                for (int l = 0; l < L; ++l) ls[l] = l;
                std::shuffle(ls.begin(), ls.end(), g.rng);
                for (int i = 0; i < n[c]; ++i) {
                    fp.frac[c][ls[i]] += w[q];
                    ++col[ls[i]];
                }
            }
            for (int l = 0; l < L; ++l) fp.k[l] = std::max(fp.k[l], col[l]);
        }
        auto res = integralize_small_placement(fp);
        std::int64_t want = 0;
        for (auto v : n) want += v;
        CHECK(res.value == want);
        std::vector<std::vector<bool>> allowed(C, std::vector<bool>(L));
        std::vector<std::int64_t> col(L, 0);
        for (int c = 0; c < C; ++c) {
            std::int64_t row = 0;
            for (int l = 0; l < L; ++l) {
                allowed[c][l] = fp.frac[c][l] > 0;
                CHECK((res.x[c][l] == 0 || res.x[c][l] == 1));
                if (res.x[c][l]) CHECK(allowed[c][l]);
                row += res.x[c][l];
                col[l] += res.x[c][l];
            }
            CHECK(row == n[c]);
        }
        for (int l = 0; l < L; ++l) CHECK(col[l] <= fp.k[l]);
        CHECK(oracle::max_matching(allowed, n, fp.k) == want);
    }
}

TEST_CASE("reinsert_small: placeholders refilled and mass kept") {
    Instance inst = Instance::from_sizes(1, {{5, 5, 5, 5, 2}, {30}});
    auto p = EptasParams::make(half, EptasMode::FixedM, 40, half);
    auto [pool, mt] = remove_medium(inst, p);
    auto [pool2, st] = remove_small_light(pool, p);
    auto [md, rt] = round_and_layer(pool2, p);
    CHECK(rt.placeholders.at(0) == 3);
    auto sol = solve_layer_ip(md, 1);
    REQUIRE(sol.feasible);
    auto re = reinsert_small(md, sol, rt, st, p, 1);
    auto jobs = inst.jobs();
    CHECK(re.schedule.size() == jobs.size());
    CHECK(disjoint(re.schedule, jobs));
    CHECK(makespan(inst, re.schedule) >= 52);
    CHECK(makespan(inst, re.schedule) <= (1 + half) * (1 + 2 * half) * 40 + half * 40);
}

TEST_CASE("reinsert_small without small jobs is a stretch") {
    Instance inst = Instance::from_sizes(2, {{35, 31}, {33}, {40}});  // all above delta T = 30
    auto p = EptasParams::make(half, EptasMode::FixedM, 60, half);
    auto [pool, mt] = remove_medium(inst, p);
    auto [pool2, st] = remove_small_light(pool, p);
    auto [md, rt] = round_and_layer(pool2, p);
    auto sol = solve_layer_ip(md, 2);
    REQUIRE(sol.feasible);
    auto re = reinsert_small(md, sol, rt, st, p, 2);
    auto jobs = inst.jobs();
    CHECK(re.schedule.size() == jobs.size());
    CHECK(disjoint(re.schedule, jobs));
    CHECK(makespan(inst, re.schedule) <= (1 + half) * (1 + 2 * half) * 60);
    for (std::size_t k = 0; k < md.jobs.size(); ++k)
        CHECK(re.schedule.at(md.jobs[k].job).start == (1 + half) * md.xi * sol.start[k]);
}

TEST_CASE("eptas_solve examples") {
    Instance one = Instance::from_sizes(1, {{3, 4}, {5}});
    auto r = eptas_solve(one, half, EptasMode::FixedM);
    CHECK(r.makespan == 12);
    CHECK(r.report.shortcut == "single-machine");

    Instance i = Instance::from_sizes(2, {{4}, {4}, {2}});
    for (auto mode : {EptasMode::FixedM, EptasMode::Augmented}) {
        auto e = eptas_solve(i, half, mode);
        CHECK(oracle::valid_complete(i, e.schedule, mode == EptasMode::Augmented));
        CHECK(e.makespan <= 4 * oracle::brute_opt(i));
        CHECK(e.report.bound == (1 + 5 * half + 2 * half * half) * e.report.T_star);
        CHECK(e.report.T_star <= solve_exact(i).makespan);
    }

    CHECK_THROWS_AS(eptas_solve(i, Rat(3, 4), EptasMode::FixedM), ContractError);
}

TEST_CASE("size guard refuses oversized models") {
    Instance i = Instance::from_sizes(3, {{7, 5}, {6, 4}, {9}, {3, 3}});
    EptasOptions o;
    o.config_cap = 2;
    CHECK_THROWS_AS(eptas_solve(i, half, EptasMode::Augmented, o), SizeBudgetError);
    o = {};
    o.max_layers = 1;
    CHECK_THROWS_AS(eptas_solve(i, half, EptasMode::Augmented, o), SizeBudgetError);
}

TEST_CASE("eptas_solve fuzz against the optimum") {
    oracle::Gen g(95);
    for (int it = 0; it < 120; ++it) {
        int m = static_cast<int>(g.uni(2, 4));
        Instance inst = g.instance(m, static_cast<int>(g.uni(1, 8)), 6);
        if (inst.total() > 24) continue;
        std::int64_t opt = oracle::brute_opt(inst);
        for (auto mode : {EptasMode::FixedM, EptasMode::Augmented}) {
            CAPTURE(inst.sizes());
            auto e = eptas_solve(inst, half, mode);
            bool aug = mode == EptasMode::Augmented;
            CHECK(oracle::valid_complete(inst, e.schedule, aug));
            CHECK(e.makespan <= e.report.bound);
            CHECK(e.report.T_star <= opt);
            CHECK(e.makespan <= 4 * opt);
            int used = e.schedule.machines_used();
            if (aug) CHECK(Rat(used) <= inst.m + floor_of(half * inst.m));
            else CHECK(used <= inst.m);
        }
    }
}

TEST_CASE("eptas_attempt keeps every job exactly once") {
    oracle::Gen g(96);
    for (int it = 0; it < 150; ++it) {
        Instance inst = g.instance(static_cast<int>(g.uni(2, 8)), static_cast<int>(g.uni(1, 16)), 10);
        Rat T = ceil_of(lower_bound_basic(inst)) + g.uni(0, 6);
        for (auto mode : {EptasMode::FixedM, EptasMode::Augmented}) {
            auto r = eptas_attempt(inst, half, mode, T);
            if (!r) continue;
            CHECK(oracle::valid_complete(inst, r->schedule, mode == EptasMode::Augmented));
            std::set<JobId> ids;
            for (auto& [id, pl] : r->schedule.entries) ids.insert(id);
            CHECK(ids.size() == static_cast<std::size_t>(inst.num_jobs()));
        }
    }
}

TEST_CASE("compact never lengthens a schedule") {
    Instance inst = Instance::from_sizes(2, {{2, 3}, {4}});
    Schedule s;
    s.place(0, 0, 5);
    s.place(1, 0, 10);
    s.place(2, 1, 7);
    compact(inst, s);
    CHECK(oracle::valid_complete(inst, s));
    CHECK(makespan(inst, s) == 5);
}

TEST_CASE("light classes start after tiny jobs placed behind a big sibling") {
    Instance inst = Instance::from_sizes(4, {{5, 1, 1}, {4}, {10, 2, 3}, {1, 2}, {2, 7, 10}});
    auto e = eptas_solve(inst, half, EptasMode::Augmented);
    CHECK(oracle::valid_complete(inst, e.schedule, true));
    EptasOptions raw;
    raw.compact = false;
    auto r = eptas_solve(inst, half, EptasMode::Augmented, raw);
    CHECK(oracle::valid_complete(inst, r.schedule, true));
}
