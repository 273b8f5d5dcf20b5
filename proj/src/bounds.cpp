#include "msrs/bounds.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace msrs {

Rat lower_bound_basic(const Instance& inst) {
    Rat lb = Rat(inst.total(), inst.m);
    for (int c = 0; c < inst.num_classes(); ++c) lb = std::max(lb, Rat(inst.class_total(c)));
    return lb;
}

Rat lower_bound_pairs(const Instance& inst) {
    std::vector<std::int64_t> p;
    for (auto& j : inst.jobs()) p.push_back(j.p);
    if (static_cast<int>(p.size()) < inst.m + 1) return 0;
    std::sort(p.begin(), p.end(), std::greater<>());
    return Rat(p[inst.m - 1] + p[inst.m]);
}

Rat select_T_53(const Instance& inst) { return std::max(lower_bound_basic(inst), lower_bound_pairs(inst)); }

ClassPartition classify(const Instance& inst, const Rat& T) {
    if (T <= 0) throw ContractError("classify needs T > 0");
    ClassPartition cp;
    for (int c = 0; c < inst.num_classes(); ++c) {
        std::int64_t mx = 0;
        for (auto& j : inst.classes[c]) mx = std::max(mx, j.p);
        Rat pc = inst.class_total(c);
        bool h = Rat(4 * mx) > 3 * T;
        bool b = !h && Rat(2 * mx) > T;
        if (h) cp.huge.insert(c);
        if (b) cp.big.insert(c);
        if (4 * pc >= 3 * T) {
            cp.geq34.insert(c);
            if (!h && !b) cp.heavy.insert(c);
        } else if (2 * pc > T) {
            cp.mid.insert(c);
            (b ? cp.mid_big : cp.mid_plain).insert(c);
        } else {
            cp.light.insert(c);
        }
    }
    return cp;
}

int machine_demand(const ClassPartition& cp) {
    int b = static_cast<int>(cp.big.size());
    int h = static_cast<int>(cp.heavy.size());
    return static_cast<int>(cp.huge.size()) + std::max(b, (b + h + 1) / 2);
}

bool demand_fits(const Instance& inst, const Rat& T) { return machine_demand(classify(inst, T)) <= inst.m; }

std::vector<Rat> t32_candidates(const Instance& inst) {
    Rat base = select_T_53(inst);
    std::vector<Rat> cand{base, Rat(ceil_of(base))};
    for (int c = 0; c < inst.num_classes(); ++c) {
        std::int64_t mx = 0;
        for (auto& j : inst.classes[c]) mx = std::max(mx, j.p);
        std::int64_t pc = inst.class_total(c);
        // exits from huge / big / geq34 under the boundaries used by classify
        cand.push_back(Rat(ceil_of(Rat(4 * mx, 3))));
        cand.push_back(Rat(2 * mx));
        cand.push_back(Rat(floor_of(Rat(4 * pc, 3)) + 1));
        // the three values as usually stated
        cand.push_back(Rat(ceil_of(Rat(4 * mx + 1, 3))));
        cand.push_back(Rat(2 * mx + 1));
        cand.push_back(Rat(ceil_of(Rat(4 * pc + 1, 3))));
    }
    std::vector<Rat> out;
    for (auto& v : cand)
        if (v >= base) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rat select_T_32(const Instance& inst) {
    if (inst.num_classes() == 0) return 0;
    auto cand = t32_candidates(inst);
    if (!demand_fits(inst, cand.back()))
        throw std::logic_error("select_T_32: largest candidate violates the machine-count inequality");
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (demand_fits(inst, cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cand[lo];
}

}  // namespace msrs
