#include "msrs/approx32.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace msrs {

namespace {

// c' is the first maximal job, or a greedy prefix exceeding T/4 when every job is <= T/4
SplitParts split_by_quarter(const std::vector<Job>& c, const Rat& T) {
    std::int64_t mx = 0;
    std::size_t at = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k].p > mx) {
            mx = c[k].p;
            at = k;
        }
    std::vector<Job> first, rest;
    if (4 * Rat(mx) > T) {
        for (std::size_t k = 0; k < c.size(); ++k) (k == at ? first : rest).push_back(c[k]);
    } else {
        std::int64_t acc = 0;
        for (auto& j : c) {
            if (4 * Rat(acc) > T)
                rest.push_back(j);
            else {
                first.push_back(j);
                acc += j.p;
            }
        }
    }
    SplitParts sp;
    if (total_of(rest) > total_of(first)) {
        sp.hat = rest;
        sp.check = first;
    } else {
        sp.hat = first;
        sp.check = rest;
    }
    return sp;
}

}  // namespace

SplitParts split_class_geq34(const std::vector<Job>& c, const Rat& T) {
    Rat pc = total_of(c);
    if (4 * pc < 3 * T) throw ContractError("split_class_geq34: p(c) must be at least 3/4 T");
    if (pc > T) throw ContractError("split_class_geq34: p(c) must not exceed T");
    for (auto& j : c)
        if (4 * Rat(j.p) > 3 * T) throw ContractError("split_class_geq34: a job exceeds 3/4 T");
    auto big = std::find_if(c.begin(), c.end(), [&](const Job& j) { return 2 * Rat(j.p) > T; });
    if (big != c.end()) {
        SplitParts sp;
        sp.hat.push_back(*big);
        for (auto it = c.begin(); it != c.end(); ++it)
            if (it != big) sp.check.push_back(*it);
        return sp;
    }
    return split_by_quarter(c, T);
}

SplitParts split_class_mid(const std::vector<Job>& c, const Rat& T) {
    Rat pc = total_of(c);
    if (!(2 * pc > T && 4 * pc < 3 * T)) throw ContractError("split_class_mid: p(c) must lie in (T/2, 3/4 T)");
    for (auto& j : c)
        if (2 * Rat(j.p) > T) throw ContractError("split_class_mid: a job exceeds T/2");
    return split_by_quarter(c, T);
}

std::vector<int> ResidualState::closed() const {
    std::vector<int> out;
    for (auto& ms : machines)
        if (ms.closed) out.push_back(ms.index);
    return out;
}

namespace {

struct NH {
    int cid;
    std::vector<Job> jobs;
    std::int64_t total;
    SplitParts parts;
};

Block whole(const NH& c) { return Block(c.cid, c.jobs); }
Block hat(const NH& c) { return Block(c.cid, c.parts.hat); }
Block check(const NH& c) { return Block(c.cid, c.parts.check); }

bool closed_load_ok(const ResidualState& st) {
    std::int64_t load = 0;
    int n = 0;
    for (auto& ms : st.machines)
        if (ms.closed) {
            load += ms.load;
            ++n;
        }
    return Rat(load) >= n * st.T;
}

void no_huge_impl(ResidualState& st, Trace* trace, bool standalone) {
    ClaimSink claims(trace);
    const Rat& T = st.T;
    const Rat ceiling = Rat(3, 2) * T;
    if (T <= 0) throw ContractError("schedule_no_huge: T must be positive");

    std::vector<NH> mids, geqs, lows;
    std::int64_t residual = 0;
    for (auto& rc : st.unscheduled) {
        NH c{rc.class_id, sorted_desc(rc.jobs), total_of(rc.jobs), {}};
        if (c.jobs.empty()) continue;
        residual += c.total;
        for (auto& j : c.jobs)
            if (4 * Rat(j.p) > 3 * T) throw ContractError("schedule_no_huge: residual contains a job > 3/4 T");
        if (Rat(c.total) > T) throw ContractError("schedule_no_huge: a residual class exceeds T");
        if (4 * Rat(c.total) >= 3 * T) {
            c.parts = split_class_geq34(c.jobs, T);
            geqs.push_back(std::move(c));
        } else if (2 * Rat(c.total) > T) {
            mids.push_back(std::move(c));
        } else {
            lows.push_back(std::move(c));
        }
    }
    st.unscheduled.clear();
    std::stable_sort(lows.begin(), lows.end(), [](const NH& a, const NH& b) { return a.total > b.total; });
    const int pool = static_cast<int>(st.unused.size());

    auto next_machine = [&]() -> MachineState& {
        if (st.unused.empty()) {
            if (standalone && Rat(residual) > pool * T)
                throw ContractError("schedule_no_huge: residual load exceeds the available machines");
            throw std::logic_error("schedule_no_huge: ran out of machines");
        }
        int idx = st.unused.front();
        st.unused.erase(st.unused.begin());
        return st.machines[idx];
    };
    auto feasible = [&] { return partial_problem(st.machines, ceiling, ceiling).empty(); };
    auto standard = [&](const std::string& step) {
        claims.check(step, "partial schedule feasible, all jobs finish by 3/2 T", feasible);
        claims.check(step, "closed machines carry load >= |M_c| T", [&] { return closed_load_ok(st); });
    };
    auto greedy = [&](MachineState* current) {
        for (auto& c : lows) {
            if (!current) current = &next_machine();
            current->push_bottom(whole(c));
            if (Rat(current->load) >= T) {
                current->closed = true;
                current = nullptr;
            }
        }
        lows.clear();
    };
    auto take = [](std::vector<NH>& v) {
        NH c = std::move(v.front());
        v.erase(v.begin());
        return c;
    };

    // Step 2
    while (mids.size() >= 2) {
        NH c1 = take(mids), c2 = take(mids);
        MachineState& M = next_machine();
        M.push_bottom(whole(c1));
        M.push_top(whole(c2));
        M.closed = true;
        claims.check("no_huge step 2", "closed machine load in (T, 3/2 T)",
                     [&] { return Rat(M.load) > T && Rat(M.load) < ceiling; });
    }
    claims.check("no_huge step 2", "|C_(1/2,3/4)| <= 1", [&] { return mids.size() <= 1; });
    standard("no_huge step 2");

    // Step 3
    while (geqs.size() >= 4) {
        NH c1 = take(geqs), c2 = take(geqs), c3 = take(geqs), c4 = take(geqs);
        MachineState& M1 = next_machine();
        M1.push_bottom(hat(c1));
        M1.push_top(hat(c2));
        MachineState& M2 = next_machine();
        M2.push_bottom(whole(c3));
        M2.push_top(check(c1));
        MachineState& M3 = next_machine();
        M3.push_bottom(check(c2));
        M3.push_bottom(whole(c4));
        M1.closed = M2.closed = M3.closed = true;
    }
    claims.check("no_huge step 3", "|C_(1/2,3/4)| <= 1 and |C_>=3/4| <= 3",
                 [&] { return mids.size() <= 1 && geqs.size() <= 3; });
    standard("no_huge step 3");

    // Step 4
    if (geqs.size() >= 2 && mids.size() == 1) {
        NH c1 = take(geqs), c2 = take(geqs), c3 = take(mids);
        MachineState& M1 = next_machine();
        M1.push_bottom(whole(c3));
        M1.push_top(hat(c1));
        MachineState& M2 = next_machine();
        M2.push_bottom(check(c1));
        M2.push_bottom(whole(c2));
        M1.closed = M2.closed = true;
    }
    claims.check("no_huge step 4", "(|C_(1/2,3/4)| = 0 and |C_>=3/4| <= 3) or (|C_(1/2,3/4)| = 1 and |C_>=3/4| <= 1)",
                 [&] {
                     return (mids.empty() && geqs.size() <= 3) || (mids.size() == 1 && geqs.size() <= 1);
                 });
    standard("no_huge step 4");

    std::vector<NH> large;
    for (auto& c : geqs) large.push_back(c);
    for (auto& c : mids) large.push_back(c);
    geqs.clear();
    mids.clear();

    if (large.size() <= 1) {
        // Step 5
        MachineState* current = nullptr;
        if (large.size() == 1) {
            current = &next_machine();
            current->push_bottom(whole(large[0]));
            if (Rat(current->load) >= T) {
                current->closed = true;
                current = nullptr;
            }
        }
        greedy(current);
        standard("no_huge step 5");
    } else if (large.size() == 2) {
        // Step 6
        NH c1 = large[0], c2 = large[1];
        if (c2.total > c1.total) std::swap(c1, c2);
        claims.check("no_huge step 6", "p(c1) >= 3/4 T", [&] { return 4 * Rat(c1.total) >= 3 * T; });
        if (4 * Rat(c2.total) <= 3 * T) {
            if (Rat(c1.total + c2.total) <= ceiling) {
                claims.note("no_huge step 6 case 1a");
                MachineState& M = next_machine();
                M.push_bottom(whole(c1));
                M.push_top(whole(c2));
                M.closed = true;
                greedy(nullptr);
            } else {
                claims.note("no_huge step 6 case 1b");
                MachineState& M = next_machine();
                M.push_bottom(whole(c2));
                M.push_top(hat(c1));
                M.closed = true;
                MachineState& M2 = next_machine();
                M2.push_bottom(check(c1));
                greedy(&M2);
            }
        } else if (Rat(total_of(c1.parts.hat) + total_of(c2.parts.hat)) <= T) {
            claims.note("no_huge step 6 case 2a");
            MachineState& M = next_machine();
            M.push_bottom(whole(c2));
            M.push_bottom(hat(c1));
            M.closed = true;
            MachineState& M2 = next_machine();
            M2.push_bottom(check(c1));
            greedy(&M2);
        } else {
            claims.note("no_huge step 6 case 2b");
            MachineState& M = next_machine();
            M.push_bottom(hat(c1));
            M.push_top(hat(c2));
            M.closed = true;
            MachineState& M2 = next_machine();
            M2.push_bottom(check(c2));
            M2.push_top(check(c1));
            greedy(&M2);
        }
        standard("no_huge step 6");
    } else {
        // Step 7
        claims.check("no_huge step 7", "all three residual classes have p(c) >= 3/4 T", [&] {
            return std::all_of(large.begin(), large.end(), [&](const NH& c) { return 4 * Rat(c.total) >= 3 * T; });
        });
        auto small_hat = std::find_if(large.begin(), large.end(),
                                      [&](const NH& c) { return 2 * Rat(total_of(c.parts.hat)) <= T; });
        if (small_hat != large.end()) {
            claims.note("no_huge step 7 case 1");
            std::rotate(large.begin(), small_hat, small_hat + 1);
            NH &c1 = large[0], &c2 = large[1], &c3 = large[2];
            MachineState& M1 = next_machine();
            M1.push_bottom(hat(c1));
            M1.push_bottom(whole(c2));
            MachineState& M2 = next_machine();
            M2.push_bottom(whole(c3));
            M2.push_top(check(c1));
            M1.closed = M2.closed = true;
            greedy(nullptr);
        } else {
            NH c1 = large[0], c2 = large[1], c3 = large[2];
            auto pc1 = total_of(c1.parts.check), pc2 = total_of(c2.parts.check);
            if (Rat(pc1 + pc2 + c3.total) <= ceiling) {
                claims.note("no_huge step 7 case 2a");
                MachineState& M1 = next_machine();
                M1.push_bottom(hat(c1));
                M1.push_top(hat(c2));
                MachineState& M2 = next_machine();
                M2.push_bottom(check(c2));
                M2.push_bottom(whole(c3));
                M2.push_top(check(c1));
                M1.closed = M2.closed = true;
                greedy(nullptr);
            } else {
                claims.note("no_huge step 7 case 2b");
                if (!(4 * Rat(pc1) > T)) std::swap(c1, c2);
                claims.check("no_huge step 7", "p(check c1) > T/4 after relabeling",
                             [&] { return 4 * Rat(total_of(c1.parts.check)) > T; });
                MachineState& M1 = next_machine();
                M1.push_bottom(hat(c1));
                M1.push_top(hat(c2));
                MachineState& M2 = next_machine();
                M2.push_bottom(whole(c3));
                M2.push_top(check(c1));
                M1.closed = M2.closed = true;
                MachineState& M3 = next_machine();
                M3.push_bottom(check(c2));
                greedy(&M3);
            }
        }
        standard("no_huge step 7");
    }
}

enum class Kind { Huge, Geq, MidBig, MidPlain, Low };

struct GC {
    int cid;
    std::vector<Job> jobs;
    std::int64_t total;
    Kind kind;
    bool big;
    SplitParts parts;
};

}  // namespace

void schedule_no_huge(ResidualState& st, Trace* trace) { no_huge_impl(st, trace, true); }

Schedule schedule_no_huge(const Instance& inst, const Rat& T, Trace* trace) {
    ResidualState st;
    st.T = T;
    st.machines.resize(inst.m);
    for (int i = 0; i < inst.m; ++i) {
        st.machines[i].index = i;
        st.unused.push_back(i);
    }
    for (int c = 0; c < inst.num_classes(); ++c) st.unscheduled.push_back({c, inst.classes[c]});
    schedule_no_huge(st, trace);
    Schedule out;
    for (auto& ms : st.machines) emit(ms, Rat(3, 2) * T, out);
    finalize(inst, out);
    return out;
}

Schedule schedule_32(const Instance& inst, Trace* trace) {
    ClaimSink claims(trace);
    if (inst.num_classes() <= inst.m) {
        claims.note("m >= |C|: one class per machine");
        return one_class_per_machine(inst);
    }
    const Rat T = select_T_32(inst);
    const Rat ceiling = Rat(3, 2) * T;
    claims.note("T = " + to_string(T));

    ResidualState st;
    st.T = T;
    st.machines.resize(inst.m);
    for (int i = 0; i < inst.m; ++i) {
        st.machines[i].index = i;
        st.unused.push_back(i);
    }

    // Step 1
    std::vector<GC> gc;
    for (int c = 0; c < inst.num_classes(); ++c) {
        GC g{c, sorted_desc(inst.classes[c]), inst.class_total(c), Kind::Low, false, {}};
        std::int64_t mx = g.jobs.front().p;
        bool huge = 4 * Rat(mx) > 3 * T;
        g.big = !huge && 2 * Rat(mx) > T;
        if (huge) {
            g.kind = Kind::Huge;
        } else if (4 * Rat(g.total) >= 3 * T) {
            g.kind = Kind::Geq;
            g.parts = split_class_geq34(g.jobs, T);
        } else if (2 * Rat(g.total) > T) {
            if (g.big) {
                g.kind = Kind::MidBig;
                g.parts.hat = {g.jobs.front()};
                g.parts.check.assign(g.jobs.begin() + 1, g.jobs.end());
            } else {
                g.kind = Kind::MidPlain;
                g.parts = split_class_mid(g.jobs, T);
            }
        }
        gc.push_back(std::move(g));
    }
    claims.check("3/2 step 1", "pieces partition each class within their size bounds", [&] {
        for (auto& g : gc) {
            if (g.kind == Kind::Huge || g.kind == Kind::Low) continue;
            auto h = total_of(g.parts.hat), k = total_of(g.parts.check);
            if (h + k != g.total || g.parts.hat.size() + g.parts.check.size() != g.jobs.size()) return false;
            if (4 * Rat(h) > 3 * T || 2 * Rat(k) > T) return false;
            if (g.kind == Kind::MidPlain && !(k <= h && 2 * Rat(h) <= T && 4 * Rat(h) > T)) return false;
            if (g.kind == Kind::Geq && k > h) return false;
        }
        return true;
    });

    std::vector<bool> done(gc.size(), false);
    auto residual_of = [&](auto pred) {
        std::vector<int> out;
        for (auto& g : gc)
            if (!done[g.cid] && pred(g)) out.push_back(g.cid);
        return out;
    };
    auto any_left = [&] { return std::find(done.begin(), done.end(), false) != done.end(); };
    auto block = [&](int c) { return Block(c, gc[c].jobs); };
    auto hat_of = [&](int c) { return Block(c, gc[c].parts.hat); };
    auto check_of = [&](int c) { return Block(c, gc[c].parts.check); };
    auto next_unused = [&]() -> MachineState& {
        if (st.unused.empty()) throw std::logic_error("schedule_32: ran out of unused machines");
        int idx = st.unused.front();
        st.unused.erase(st.unused.begin());
        return st.machines[idx];
    };
    auto invariant = [&](const std::string& step) {
        claims.check(step, "partial schedule feasible, all jobs finish by 3/2 T",
                     [&] { return partial_problem(st.machines, ceiling, ceiling).empty(); });
        claims.check(step, "|M_u| >= max{|C_B|, ceil((|C_B| + |C_>=3/4 \\ C_B|)/2)}", [&] {
            int b = static_cast<int>(residual_of([](const GC& g) { return g.big; }).size());
            int h = static_cast<int>(residual_of([](const GC& g) { return g.kind == Kind::Geq && !g.big; }).size());
            return static_cast<int>(st.unused.size()) >= std::max(b, (b + h + 1) / 2);
        });
        claims.check(step, "p(M_H) + p(residual) <= (|M_u| + |M_H|) T", [&] {
            std::int64_t load = 0;
            for (int i : st.open_huge) load += st.machines[i].load;
            for (auto& g : gc)
                if (!done[g.cid]) load += g.total;
            return Rat(load) <= Rat(static_cast<std::int64_t>(st.unused.size() + st.open_huge.size())) * T;
        });
    };
    auto hand_to_no_huge = [&](const std::string& step) {
        claims.note(step + ": continuing with no_huge on the residual instance");
        claims.check(step, "residual load <= |M_u| T", [&] {
            std::int64_t load = 0;
            for (auto& g : gc)
                if (!done[g.cid]) load += g.total;
            for (auto& rc : st.unscheduled) load += total_of(rc.jobs);
            return Rat(load) <= Rat(static_cast<std::int64_t>(st.unused.size())) * T;
        });
        for (auto& g : gc)
            if (!done[g.cid]) {
                st.unscheduled.push_back({g.cid, g.jobs});
                done[g.cid] = true;
            }
        no_huge_impl(st, trace, false);
    };
    auto one_machine_each = [&](const std::string& step) {
        auto left = residual_of([](const GC&) { return true; });
        claims.check(step, "enough unused machines for one per residual class",
                     [&] { return st.unused.size() >= left.size(); });
        for (int c : left) {
            MachineState& M = next_unused();
            M.push_bottom(block(c));
            M.closed = true;
            done[c] = true;
        }
    };
    // Steps 5 and 10: c' onto the last huge machine, no_huge for the rest, then rotate that machine
    auto rotation_endgame = [&](const std::string& step) {
        int m0 = st.open_huge.front();
        st.open_huge.clear();
        auto cands = residual_of([](const GC& g) { return !g.big; });
        int c = cands.front();
        auto in_band = [&](const std::vector<Job>& part) {
            Rat p = total_of(part);
            return 4 * p > T && 2 * p <= T;
        };
        bool use_hat = in_band(gc[c].parts.hat);
        claims.check(step, "a piece of c lies in (T/4, T/2]", [&] { return use_hat || in_band(gc[c].parts.check); });
        std::vector<Job> cprime = use_hat ? gc[c].parts.hat : gc[c].parts.check;
        std::vector<Job> csecond = use_hat ? gc[c].parts.check : gc[c].parts.hat;
        // distinct class tag until the rotation is settled
        const int tag = -2 - c;
        MachineState& M0 = st.machines[m0];
        M0.push_bottom(Block(tag, cprime));
        M0.closed = true;
        done[c] = true;
        st.unscheduled.push_back({c, csecond});
        hand_to_no_huge(step);

        Schedule others;
        for (auto& ms : st.machines)
            if (ms.index != m0) emit(ms, ceiling, others);
        Rat a = -1, e = -1;
        for (auto& j : csecond) {
            if (!others.contains(j.id)) continue;
            Rat s = others.at(j.id).start;
            if (a < 0 || s < a) a = s;
            if (s + j.p > e) e = s + j.p;
        }
        Rat len = total_of(csecond);
        claims.check(step, "c'' was placed as one block", [&] { return a >= 0 && e - a == len; });
        std::vector<Block> blocks = M0.bottom;
        for (auto& b : blocks)
            if (b.class_id == tag) b.class_id = c;
        bool placed = false;
        for (std::size_t r = 0; r < blocks.size() && !placed; ++r) {
            std::vector<Block> order(blocks.begin() + r, blocks.end());
            order.insert(order.end(), blocks.begin(), blocks.begin() + r);
            for (int align = 0; align < 2 && !placed; ++align) {
                std::vector<std::pair<Block, Rat>> tl;
                Rat t = 0;
                for (std::size_t k = 0; k < order.size(); ++k) {
                    Rat s = (align == 1 && k + 1 == order.size()) ? ceiling - order[k].len : t;
                    tl.emplace_back(order[k], s);
                    t += order[k].len;
                }
                bool ok = true;
                for (auto& [b, s] : tl)
                    if (b.class_id == c && s < a + len && a < s + b.len) ok = false;
                if (ok) {
                    M0.fixed = tl;
                    placed = true;
                }
            }
        }
        claims.check(step, "a rotation of m0 separates c' from c''", [&] { return placed; });
        if (!placed) throw std::logic_error("schedule_32: rotation failed");
        claims.check(step, "after rotation the schedule is feasible and ends by 3/2 T",
                     [&] { return partial_problem(st.machines, ceiling, ceiling).empty(); });
    };
    auto finish = [&] {
        Schedule out;
        for (auto& ms : st.machines) emit(ms, ceiling, out);
        finalize(inst, out);
        return out;
    };

    // Step 2
    for (auto& g : gc) {
        if (g.kind != Kind::Huge) continue;
        MachineState& M = next_unused();
        M.push_bottom(block(g.cid));
        done[g.cid] = true;
        if (Rat(M.load) == T)
            M.closed = true;
        else
            st.open_huge.push_back(M.index);
    }
    claims.check("3/2 step 2", "open huge machines have load in (3/4 T, T)", [&] {
        return std::all_of(st.open_huge.begin(), st.open_huge.end(), [&](int i) {
            Rat l = st.machines[i].load;
            return 4 * l > 3 * T && l < T;
        });
    });
    invariant("3/2 step 2");
    if (!any_left()) return finish();

    // Step 3
    {
        auto lows = residual_of([](const GC& g) { return g.kind == Kind::Low; });
        std::stable_sort(lows.begin(), lows.end(), [&](int x, int y) { return gc[x].total > gc[y].total; });
        for (int c : lows) {
            if (st.open_huge.empty()) break;
            MachineState& M = st.machines[st.open_huge.front()];
            M.push_bottom(block(c));
            done[c] = true;
            if (Rat(M.load) >= T) {
                M.closed = true;
                st.open_huge.erase(st.open_huge.begin());
            }
        }
    }
    invariant("3/2 step 3");
    if (!any_left()) return finish();
    if (st.open_huge.empty()) {
        hand_to_no_huge("3/2 step 3");
        return finish();
    }
    claims.check("3/2 step 3", "no class of size <= T/2 is left",
                 [&] { return residual_of([](const GC& g) { return g.kind == Kind::Low; }).empty(); });

    // Step 4
    while (st.open_huge.size() >= 2) {
        auto mp = residual_of([](const GC& g) { return g.kind == Kind::MidPlain; });
        if (mp.empty()) break;
        int c = mp.front();
        MachineState& m1 = st.machines[st.open_huge[0]];
        MachineState& m2 = st.machines[st.open_huge[1]];
        m2.lift();
        m2.push_bottom(check_of(c));
        m1.push_top(hat_of(c));
        m1.closed = m2.closed = true;
        done[c] = true;
        st.open_huge.erase(st.open_huge.begin(), st.open_huge.begin() + 2);
    }
    invariant("3/2 step 4");
    if (!any_left()) return finish();
    if (st.open_huge.empty()) {
        hand_to_no_huge("3/2 step 4");
        return finish();
    }

    // Step 5
    if (st.open_huge.size() == 1) {
        if (!residual_of([](const GC& g) { return !g.big; }).empty())
            rotation_endgame("3/2 step 5");
        else
            one_machine_each("3/2 step 5");
        return finish();
    }
    claims.check("3/2 step 5", "|M_H| >= 2 and every residual class is big or has p(c) >= 3/4 T", [&] {
        return st.open_huge.size() >= 2 &&
               residual_of([](const GC& g) { return !g.big && g.kind != Kind::Geq; }).empty();
    });

    // Step 6
    while (!st.open_huge.empty()) {
        auto mb = residual_of([](const GC& g) { return g.kind == Kind::MidBig; });
        auto gq = residual_of([](const GC& g) { return g.kind == Kind::Geq; });
        if (mb.empty() || gq.empty()) break;
        int b = mb.front(), c = gq.front();
        MachineState& m1 = st.machines[st.open_huge.front()];
        MachineState& m2 = next_unused();
        m1.push_top(check_of(c));
        m2.push_bottom(hat_of(c));
        m2.push_top(block(b));
        m1.closed = m2.closed = true;
        done[b] = done[c] = true;
        st.open_huge.erase(st.open_huge.begin());
    }
    invariant("3/2 step 6");
    if (!any_left()) return finish();
    if (st.open_huge.empty()) {
        hand_to_no_huge("3/2 step 6");
        return finish();
    }

    // Step 7
    if (!residual_of([](const GC& g) { return g.kind == Kind::MidBig; }).empty()) {
        claims.check("3/2 step 7", "only big classes in (T/2, 3/4 T) are left", [&] {
            return residual_of([](const GC& g) { return g.kind != Kind::MidBig; }).empty();
        });
        one_machine_each("3/2 step 7");
        return finish();
    }
    claims.check("3/2 step 7", "every residual class has p(c) >= 3/4 T",
                 [&] { return residual_of([](const GC& g) { return g.kind != Kind::Geq; }).empty(); });

    // Step 8
    while (st.open_huge.size() >= 2) {
        auto gq = residual_of([](const GC& g) { return g.kind == Kind::Geq; });
        if (gq.size() < 2) break;
        std::stable_partition(gq.begin(), gq.end(), [&](int c) { return gc[c].big; });
        int c1 = gq[0], c2 = gq[1];
        MachineState& m1 = st.machines[st.open_huge[0]];
        MachineState& m2 = st.machines[st.open_huge[1]];
        m2.lift();
        m1.push_top(check_of(c1));
        m2.push_bottom(check_of(c2));
        MachineState& m3 = next_unused();
        m3.push_bottom(hat_of(c1));
        m3.push_top(hat_of(c2));
        m1.closed = m2.closed = m3.closed = true;
        done[c1] = done[c2] = true;
        st.open_huge.erase(st.open_huge.begin(), st.open_huge.begin() + 2);
    }
    invariant("3/2 step 8");
    if (!any_left()) return finish();
    if (st.open_huge.empty()) {
        hand_to_no_huge("3/2 step 8");
        return finish();
    }
    claims.check("3/2 step 8", "|M_H| = 1 or at most one class with p(c) >= 3/4 T is left", [&] {
        return st.open_huge.size() == 1 || residual_of([](const GC& g) { return g.kind == Kind::Geq; }).size() <= 1;
    });

    // Step 9
    if (st.open_huge.size() >= 2 || residual_of([](const GC& g) { return !g.big; }).empty()) {
        one_machine_each("3/2 step 9");
        return finish();
    }

    // Step 10
    rotation_endgame("3/2 step 10");
    return finish();
}

}  // namespace msrs
