#include "msrs/instance.hpp"

#include <algorithm>
#include <numeric>

namespace msrs {

Instance Instance::from_sizes(int m, const std::vector<std::vector<std::int64_t>>& sizes, bool allow_zero) {
    if (m < 1) throw ContractError("machine count must be >= 1");
    Instance inst;
    inst.m = m;
    JobId next = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        if (sizes[c].empty()) throw ContractError("class " + std::to_string(c) + " is empty");
        std::vector<Job> kept;
        std::vector<Job> zeros;
        for (auto p : sizes[c]) {
            if (p < 0 || (p == 0 && !allow_zero))
                throw ContractError("class " + std::to_string(c) + " has non-positive duration " + std::to_string(p));
            Job j{next++, 0, p};
            (p == 0 ? zeros : kept).push_back(j);
        }
        if (!kept.empty()) {
            int cid = static_cast<int>(inst.classes.size());
            for (auto& j : kept) j.class_id = cid;
            inst.classes.push_back(std::move(kept));
        }
        for (auto& j : zeros) {
            j.class_id = -1;
            inst.zero_jobs.push_back(j);
        }
    }
    return inst;
}

int Instance::num_jobs() const {
    int n = 0;
    for (auto& c : classes) n += static_cast<int>(c.size());
    return n;
}

std::int64_t Instance::total() const {
    std::int64_t t = 0;
    for (auto& c : classes)
        for (auto& j : c) t += j.p;
    return t;
}

std::int64_t Instance::class_total(int c) const {
    std::int64_t t = 0;
    for (auto& j : classes.at(c)) t += j.p;
    return t;
}

std::vector<Job> Instance::jobs() const {
    std::vector<Job> out;
    for (auto& c : classes) out.insert(out.end(), c.begin(), c.end());
    return out;
}

std::vector<std::vector<std::int64_t>> Instance::sizes() const {
    std::vector<std::vector<std::int64_t>> out;
    for (auto& c : classes) {
        out.emplace_back();
        for (auto& j : c) out.back().push_back(j.p);
    }
    return out;
}

int Schedule::machines_used() const {
    int mx = 0;
    for (auto& [id, pl] : entries) mx = std::max(mx, pl.machine + 1);
    return mx;
}

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::MachineOverlap: return "machine-overlap";
        case ViolationKind::ClassOverlap: return "class-overlap";
        case ViolationKind::MachineOutOfRange: return "machine-out-of-range";
        case ViolationKind::ResourceOverlap: return "resource-overlap";
    }
    return "?";
}

namespace {

struct Interval {
    Rat start, end;
    JobId id;
};

// all overlapping pairs among half-open intervals
void overlapping_pairs(std::vector<Interval>& v, ViolationKind kind, std::vector<Violation>& out) {
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
        if (a.start != b.start) return a.start < b.start;
        return a.id < b.id;
    });
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].start == v[i].end) continue;
        for (std::size_t k = i + 1; k < v.size() && v[k].start < v[i].end; ++k) {
            if (v[k].start == v[k].end) continue;
            out.push_back({kind, std::min(v[i].id, v[k].id), std::max(v[i].id, v[k].id)});
        }
    }
}

}  // namespace

ValidationReport validate(const Instance& inst, const Schedule& s, bool allow_extra_machines) {
    std::map<JobId, Job> by_id;
    for (auto& c : inst.classes)
        for (auto& j : c) by_id[j.id] = j;
    for (auto& j : inst.zero_jobs) by_id[j.id] = j;

    for (auto& [id, pl] : s.entries) {
        if (!by_id.count(id)) throw StructuralError("schedule references unknown job " + std::to_string(id));
        if (pl.start < 0) throw StructuralError("job " + std::to_string(id) + " has negative start");
        if (pl.machine < 0) throw StructuralError("job " + std::to_string(id) + " has negative machine index");
    }
    for (auto& [id, j] : by_id)
        if (!s.contains(id)) throw StructuralError("job " + std::to_string(id) + " missing from schedule");

    ValidationReport rep;
    std::map<int, std::vector<Interval>> per_machine, per_class;
    for (auto& [id, pl] : s.entries) {
        const Job& j = by_id[id];
        Rat end = pl.start + j.p;
        if (end > rep.makespan) rep.makespan = end;
        if (pl.machine >= inst.m && !allow_extra_machines)
            rep.violations.push_back({ViolationKind::MachineOutOfRange, id, -1});
        per_machine[pl.machine].push_back({pl.start, end, id});
        if (j.class_id >= 0) per_class[j.class_id].push_back({pl.start, end, id});
    }
    for (auto& [mach, v] : per_machine) overlapping_pairs(v, ViolationKind::MachineOverlap, rep.violations);
    for (auto& [cls, v] : per_class) overlapping_pairs(v, ViolationKind::ClassOverlap, rep.violations);
    rep.valid = rep.violations.empty();
    return rep;
}

Rat makespan(const Instance& inst, const Schedule& s) {
    std::map<JobId, std::int64_t> p;
    for (auto& c : inst.classes)
        for (auto& j : c) p[j.id] = j.p;
    Rat mk = 0;
    for (auto& [id, pl] : s.entries) {
        auto it = p.find(id);
        Rat end = pl.start + (it == p.end() ? 0 : it->second);
        if (end > mk) mk = end;
    }
    return mk;
}

void finalize(const Instance& inst, Schedule& s) {
    for (auto& j : inst.zero_jobs) s.place(j.id, 0, 0);
}

Schedule one_class_per_machine(const Instance& inst) {
    Schedule s;
    for (int c = 0; c < inst.num_classes(); ++c) {
        std::int64_t t = 0;
        for (auto& j : inst.classes[c]) {
            s.place(j.id, c, t);
            t += j.p;
        }
    }
    finalize(inst, s);
    return s;
}

Schedule sequential(const Instance& inst) {
    Schedule s;
    std::int64_t t = 0;
    for (auto& c : inst.classes)
        for (auto& j : c) {
            s.place(j.id, 0, t);
            t += j.p;
        }
    finalize(inst, s);
    return s;
}

}  // namespace msrs
