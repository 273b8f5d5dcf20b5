#include "msrs/hardness.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace msrs {

std::string formula_problem(const Formula322& f) {
    if (f.vars < 1) return "at least one variable is required";
    if (3 * f.clauses.size() != 4 * static_cast<std::size_t>(f.vars))
        return "3|C| = 4|X| fails (" + std::to_string(f.clauses.size()) + " clauses, " + std::to_string(f.vars) +
               " variables)";
    std::vector<int> pos(f.vars + 1, 0), neg(f.vars + 1, 0);
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        const auto& cl = f.clauses[c];
        std::set<int> vs;
        for (int l : cl) {
            if (l == 0 || std::abs(l) > f.vars)
                return "clause " + std::to_string(c + 1) + " names an unknown variable " + std::to_string(l);
            vs.insert(std::abs(l));
            (l > 0 ? pos : neg)[std::abs(l)]++;
        }
        if (vs.size() != 3) return "clause " + std::to_string(c + 1) + " repeats a variable";
        bool all_pos = std::all_of(cl.begin(), cl.end(), [](int l) { return l > 0; });
        bool all_neg = std::all_of(cl.begin(), cl.end(), [](int l) { return l < 0; });
        if (!all_pos && !all_neg) return "clause " + std::to_string(c + 1) + " mixes negated and unnegated literals";
    }
    for (int v = 1; v <= f.vars; ++v) {
        if (pos[v] != 2) return "literal x" + std::to_string(v) + " occurs " + std::to_string(pos[v]) + " times, not 2";
        if (neg[v] != 2)
            return "literal ~x" + std::to_string(v) + " occurs " + std::to_string(neg[v]) + " times, not 2";
    }
    return "";
}

void check_formula(const Formula322& f) {
    if (auto p = formula_problem(f); !p.empty()) throw ContractError("illegal Monotone 3-SAT-(2,2) formula: " + p);
}

bool satisfies(const Formula322& f, const Assignment& a) {
    if (a.size() != static_cast<std::size_t>(f.vars)) return false;
    for (auto& cl : f.clauses)
        if (std::none_of(cl.begin(), cl.end(), [&](int l) { return a[std::abs(l) - 1] == (l > 0); })) return false;
    return true;
}

namespace {

Assignment from_bits(int vars, std::uint64_t bits) {
    Assignment a(vars);
    for (int v = 0; v < vars; ++v) a[v] = (bits >> v) & 1;
    return a;
}

}  // namespace

std::optional<Assignment> find_satisfying(const Formula322& f) {
    if (f.vars > 40) throw ContractError("find_satisfying: too many variables for exhaustive search");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.vars); ++bits) {
        Assignment a = from_bits(f.vars, bits);
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

std::int64_t count_models(const Formula322& f) {
    if (f.vars > 40) throw ContractError("count_models: too many variables for exhaustive search");
    std::int64_t n = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.vars); ++bits) n += satisfies(f, from_bits(f.vars, bits));
    return n;
}

namespace {

// multisets of 3-subsets of {1..n}, each element covered exactly twice, in nondecreasing order
void two_regular(int n, std::vector<int>& deg, std::vector<std::array<int, 3>>& cur,
                 std::vector<std::vector<std::array<int, 3>>>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    int first = 0;
    for (int v = 1; v <= n && !first; ++v)
        if (deg[v] < 2) first = v;
    if (!first) {
        out.push_back(cur);
        return;
    }
    // the lowest unsaturated variable must be in the next triple
    for (int b = first + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c) {
            if (deg[b] >= 2 || deg[c] >= 2) continue;
            std::array<int, 3> t{first, b, c};
            if (!cur.empty() && t < cur.back()) continue;
            ++deg[first], ++deg[b], ++deg[c];
            cur.push_back(t);
            two_regular(n, deg, cur, out, limit);
            cur.pop_back();
            --deg[first], --deg[b], --deg[c];
        }
}

}  // namespace

std::vector<Formula322> enumerate_legal_formulas(int vars, std::size_t limit) {
    std::vector<Formula322> out;
    if (vars < 1 || vars % 3 != 0) return out;
    std::vector<std::vector<std::array<int, 3>>> halves;
    std::vector<int> deg(vars + 1, 0);
    std::vector<std::array<int, 3>> cur;
    two_regular(vars, deg, cur, halves, limit);
    for (auto& p : halves)
        for (auto& q : halves) {
            if (out.size() >= limit) return out;
            Formula322 f;
            f.vars = vars;
            for (auto& t : p) f.clauses.push_back(t);
            for (auto& t : q) f.clauses.push_back({-t[0], -t[1], -t[2]});
            out.push_back(f);
        }
    return out;
}

std::pair<MultiResourceInstance, GadgetMap> reduce(const Formula322& f) {
    check_formula(f);
    const int C = static_cast<int>(f.clauses.size()), X = f.vars;
    MultiResourceInstance inst;
    inst.m = 2 * C + 2 * X;
    GadgetMap g;
    auto res = [&](const std::string& name) {
        int id = inst.resource_id(name);
        g.resources[name] = id;
        return id;
    };
    auto job = [&](std::int64_t p, const std::string& name) {
        MRJob j;
        j.id = static_cast<JobId>(inst.jobs.size());
        j.p = p;
        j.name = name;
        inst.jobs.push_back(j);
        return j.id;
    };
    auto give = [&](JobId j, int r) { inst.jobs[j].resources.push_back(r); };
    auto idx = [](int i) { return std::to_string(i + 1); };

    for (int i = 0; i < C; ++i) {
        g.A.push_back(job(3, "jA_" + idx(i)));
        g.a.push_back(job(1, "ja_" + idx(i)));
    }
    for (int i = 0; i < X; ++i) {
        g.b.push_back(job(2, "jb_" + idx(i)));
        g.B.push_back(job(2, "jB_" + idx(i)));
    }
    for (int i = 0; i < C; ++i) {
        int r = res("A_" + idx(i));
        give(g.A[i], r);
        give(g.a[i], r);
        if (i + 1 < C) {
            int t = res("A_" + idx(i) + "->" + idx(i + 1));
            give(g.a[i], t);
            give(g.A[i + 1], t);
        }
    }
    for (int i = 0; i < X; ++i) {
        int r = res("B_" + idx(i));
        give(g.b[i], r);
        give(g.B[i], r);
        if (i + 1 < X) {
            int t = res("B_" + idx(i) + "->" + idx(i + 1));
            give(g.B[i], t);
            give(g.b[i + 1], t);
        }
    }
    {
        int r = res("A->B");
        give(g.a[C - 1], r);
        give(g.b[0], r);
    }
    for (int v = 0; v < X; ++v) {
        g.x.push_back(job(1, "jx_" + idx(v)));
        g.xbar.push_back(job(1, "jxbar_" + idx(v)));
        g.dx.push_back(job(2, "jdx_" + idx(v)));
        int r = res("X_" + idx(v));
        give(g.x[v], r);
        give(g.xbar[v], r);
        give(g.dx[v], r);
        int b = res("B_x" + idx(v));
        give(g.dx[v], b);
        give(g.B[v], b);
    }
    for (int c = 0; c < C; ++c) {
        std::array<JobId, 3> lj{};
        for (int k = 0; k < 3; ++k) {
            int l = f.clauses[c][k];
            lj[k] = job(1, "jc" + idx(c) + "_" + (l > 0 ? "x" : "~x") + std::to_string(std::abs(l)));
        }
        g.lit.push_back(lj);
        g.d.push_back(job(1, "jc" + idx(c) + "_d"));
        int r = res("C_" + idx(c));
        for (int k = 0; k < 3; ++k) give(lj[k], r);
        give(g.d[c], r);
        int a = res("A_c" + idx(c));
        give(g.d[c], a);
        give(g.A[c], a);
        for (int k = 0; k < 3; ++k) {
            int l = f.clauses[c][k];
            int v = std::abs(l) - 1;
            int t = res("V^c" + idx(c) + "_" + (l > 0 ? "x" : "~x") + std::to_string(v + 1));
            give(lj[k], t);
            give(l > 0 ? g.x[v] : g.xbar[v], t);
        }
    }
    if (inst.total() != 4 * static_cast<std::int64_t>(inst.m))
        throw std::logic_error("reduce: total processing time differs from 4m");
    return {inst, g};
}

namespace {

void place_frame(const Formula322& f, const GadgetMap& g, Schedule& s) {
    const int C = static_cast<int>(f.clauses.size()), X = f.vars;
    for (int i = 0; i < C; ++i) {
        s.place(g.a[i], i, 0);
        s.place(g.A[i], i, 1);
    }
    for (int i = 0; i < X; ++i) {
        s.place(g.B[i], C + i, 0);
        s.place(g.b[i], C + i, 2);
    }
    for (int v = 0; v < X; ++v) s.place(g.dx[v], C + X + v, 2);
    for (int c = 0; c < C; ++c) s.place(g.d[c], C + 2 * X + c, 0);
}

}  // namespace

Schedule schedule_from_assignment(const Formula322& f, const Assignment& a, const GadgetMap& g) {
    check_formula(f);
    if (a.size() != static_cast<std::size_t>(f.vars)) throw ContractError("assignment has the wrong length");
    const int C = static_cast<int>(f.clauses.size()), X = f.vars;
    Schedule s;
    place_frame(f, g, s);
    for (int v = 0; v < X; ++v) {
        s.place(a[v] ? g.x[v] : g.xbar[v], C + X + v, 0);
        s.place(a[v] ? g.xbar[v] : g.x[v], C + X + v, 1);
    }
    for (int c = 0; c < C; ++c) {
        const auto& cl = f.clauses[c];
        int w = -1;
        for (int k = 0; k < 3 && w < 0; ++k)
            if (a[std::abs(cl[k]) - 1] == (cl[k] > 0)) w = k;
        if (w < 0) throw ContractError("assignment leaves clause " + std::to_string(c + 1) + " unsatisfied");
        const int mc = C + 2 * X + c;
        s.place(g.lit[c][w], mc, 1);
        int t = 2;
        for (int k = 0; k < 3; ++k)
            if (k != w) s.place(g.lit[c][k], mc, t++);
    }
    return s;
}

Schedule trivial_schedule_5(const Formula322& f, const GadgetMap& g) {
    check_formula(f);
    const int C = static_cast<int>(f.clauses.size()), X = f.vars;
    Schedule s;
    place_frame(f, g, s);
    for (int v = 0; v < X; ++v) {
        s.place(g.x[v], C + X + v, 0);
        s.place(g.xbar[v], C + X + v, 1);
    }
    for (int c = 0; c < C; ++c)
        for (int k = 0; k < 3; ++k) s.place(g.lit[c][k], C + 2 * X + c, 2 + k);
    return s;
}

namespace {

// undo the global flip: if ja_1 does not start at 0 the schedule is mirrored around 2
Schedule oriented(const MultiResourceInstance& inst, const GadgetMap& g, const Schedule& s) {
    if (s.at(g.a[0]).start == 0) return s;
    Schedule out;
    for (auto& j : inst.jobs) {
        const auto& pl = s.at(j.id);
        out.place(j.id, pl.machine, Rat(4) - pl.start - j.p);
    }
    return out;
}

}  // namespace

Assignment assignment_from_schedule(const Formula322& f, const MultiResourceInstance& inst, const GadgetMap& g,
                                    const Schedule& s) {
    check_formula(f);
    ValidationReport rep = validate(inst, s);
    if (!rep.valid) throw ContractError("assignment_from_schedule: schedule is not valid");
    if (rep.makespan > 4) throw ContractError("assignment_from_schedule: makespan exceeds 4");
    Schedule o = oriented(inst, g, s);
    Assignment a(f.vars);
    for (int v = 0; v < f.vars; ++v) a[v] = o.at(g.x[v]).start == 0;
    if (!satisfies(f, a)) throw std::logic_error("assignment_from_schedule: variable jobs in [0,1] do not satisfy the formula");
    return a;
}

bool dummy_rigid(const Formula322& f, const GadgetMap& g, const Schedule& s) {
    // orientation is decided by ja_1, then every anchor is checked
    const bool flip = s.at(g.a[0]).start != 0;
    auto at = [&](JobId j, std::int64_t start, std::int64_t p) {
        Rat t = s.at(j).start;
        return flip ? Rat(4) - t - p == start : t == start;
    };
    bool ok = true;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) ok = ok && at(g.a[i], 0, 1) && at(g.A[i], 1, 3) && at(g.d[i], 0, 1);
    for (int v = 0; v < f.vars; ++v) ok = ok && at(g.B[v], 0, 2) && at(g.b[v], 2, 2) && at(g.dx[v], 2, 2);
    return ok;
}

std::string to_string(GapVerdict v) {
    switch (v) {
        case GapVerdict::SatSide4: return "sat-side-4";
        case GapVerdict::UnsatSide5: return "unsat-side-5";
        case GapVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

GapResult verify_gap(const Formula322& f, const SearchLimits& limits) {
    auto [inst, g] = reduce(f);
    GapResult r;
    if (auto w = find_satisfying(f)) {
        r.witness = w;
        r.schedule = schedule_from_assignment(f, *w, g);
        ValidationReport rep = validate(inst, r.schedule);
        if (!rep.valid || rep.makespan != 4) throw std::logic_error("verify_gap: constructed schedule is not a valid makespan-4 schedule");
        r.verdict = GapVerdict::SatSide4;
        r.detail = "satisfying assignment found; constructed schedule has makespan 4";
        return r;
    }
    ExactResult ex = decide_makespan(inst, 4, limits);
    r.nodes = ex.nodes;
    if (ex.status == ExactStatus::BudgetExhausted) {
        r.detail = "formula unsatisfiable; oracle budget exhausted at K = 4";
        return r;
    }
    if (ex.status == ExactStatus::Optimal) {
        r.schedule = ex.schedule;
        r.detail = "formula unsatisfiable but the oracle found a makespan-4 schedule";
        return r;
    }
    r.schedule = trivial_schedule_5(f, g);
    ValidationReport rep = validate(inst, r.schedule);
    if (!rep.valid || rep.makespan != 5) throw std::logic_error("verify_gap: trivial schedule is not a valid makespan-5 schedule");
    r.verdict = GapVerdict::UnsatSide5;
    r.detail = "formula unsatisfiable; no schedule of makespan 4; trivial schedule has makespan 5";
    return r;
}

}  // namespace msrs
