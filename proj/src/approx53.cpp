#include "msrs/approx53.hpp"

#include "msrs/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace msrs {

SplitResult split_large_class(const std::vector<Job>& c, const Rat& T) {
    Rat pc = total_of(c);
    if (!(3 * pc > 2 * T)) throw ContractError("split_large_class: p(c) must exceed 2/3 T");
    if (pc > T) throw ContractError("split_large_class: p(c) must not exceed T");
    for (auto& j : c)
        if (2 * Rat(j.p) > T) throw ContractError("split_large_class: a job exceeds T/2");

    SplitResult r;
    auto top = std::find_if(c.begin(), c.end(), [&](const Job& j) { return 3 * Rat(j.p) > T; });
    if (top != c.end()) {
        r.c1.push_back(*top);
        for (auto it = c.begin(); it != c.end(); ++it)
            if (it != top) r.c2.push_back(*it);
        return r;
    }
    std::int64_t acc = 0;
    for (auto& j : c) {
        if (3 * Rat(acc) >= T)
            r.c2.push_back(j);
        else {
            r.c1.push_back(j);
            acc += j.p;
        }
    }
    return r;
}

Schedule schedule_53(const Instance& inst, Trace* trace) {
    ClaimSink claims(trace);
    if (inst.num_classes() <= inst.m) {
        claims.note("m >= |C|: one class per machine");
        return one_class_per_machine(inst);
    }
    const Rat T = select_T_53(inst);
    const Rat ceiling = Rat(5, 3) * T;
    claims.note("T = " + to_string(T));

    std::vector<MachineState> ms(inst.m);
    for (int i = 0; i < inst.m; ++i) ms[i].index = i;

    std::vector<int> bplus, large, rest;
    for (int c = 0; c < inst.num_classes(); ++c) {
        bool has_big = std::any_of(inst.classes[c].begin(), inst.classes[c].end(),
                                   [&](const Job& j) { return 2 * Rat(j.p) > T; });
        if (has_big)
            bplus.push_back(c);
        else if (3 * Rat(inst.class_total(c)) > 2 * T)
            large.push_back(c);
        else
            rest.push_back(c);
    }
    auto block_of = [&](int c) { return Block(c, sorted_desc(inst.classes[c])); };
    auto no_overload = [&] {
        return std::all_of(ms.begin(), ms.end(), [&](const MachineState& s) { return Rat(s.load) <= ceiling; });
    };
    auto closed_loaded = [&] {
        return std::all_of(ms.begin(), ms.end(), [&](const MachineState& s) { return !s.closed || Rat(s.load) >= T; });
    };

    // Step 1
    if (static_cast<int>(bplus.size()) > inst.m) throw std::logic_error("schedule_53: more B+ classes than machines");
    for (std::size_t k = 0; k < bplus.size(); ++k) ms[k].push_bottom(block_of(bplus[k]));
    claims.check("5/3 step 1", "B+ machines carry load <= T", [&] {
        return std::all_of(ms.begin(), ms.end(), [&](const MachineState& s) { return Rat(s.load) <= T; });
    });

    // Step 2
    int i = 0;
    auto advance = [&] {
        while (i < inst.m && ms[i].closed) ++i;
        if (i >= inst.m) throw std::logic_error("schedule_53: ran out of machines");
    };
    for (int c : large) {
        advance();
        Rat pc = inst.class_total(c);
        if (Rat(ms[i].load) + pc <= ceiling) {
            ms[i].push_bottom(block_of(c));
            if (Rat(ms[i].load) > T) ms[i].closed = true;
            continue;
        }
        SplitResult sr = split_large_class(sorted_desc(inst.classes[c]), T);
        if (total_of(sr.c1) < total_of(sr.c2)) std::swap(sr.c1, sr.c2);
        ms[i].push_top(Block(c, sr.c1));
        ms[i].closed = true;
        claims.check("5/3 step 2", "machine closed after a split carries load > T",
                     [&] { return Rat(ms[i].load) > T; });
        ++i;
        advance();
        ms[i].push_front_bottom(Block(c, sr.c2));
        if (Rat(ms[i].load) >= T) ms[i].closed = true;
    }
    claims.check("5/3 step 2", "no machine exceeds 5/3 T", no_overload);
    claims.check("5/3 step 2", "closed machines carry load >= T", closed_loaded);
    claims.check("5/3 step 2", "partial schedule feasible",
                 [&] { return partial_problem(ms, ceiling, ceiling).empty(); });

    // Step 3
    int g = 0;
    for (int c : rest) {
        while (g < inst.m && ms[g].closed) ++g;
        if (g >= inst.m) throw std::logic_error("schedule_53: greedy ran out of machines");
        ms[g].push_bottom(block_of(c));
        if (Rat(ms[g].load) > T) ms[g].closed = true;
    }
    claims.check("5/3 step 3", "no machine exceeds 5/3 T", no_overload);
    claims.check("5/3 step 3", "closed machines carry load >= T", closed_loaded);
    claims.check("5/3 step 3", "schedule feasible", [&] { return partial_problem(ms, ceiling, ceiling).empty(); });

    Schedule out;
    for (auto& s : ms) emit(s, ceiling, out);
    finalize(inst, out);
    return out;
}

}  // namespace msrs
