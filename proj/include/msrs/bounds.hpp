#pragma once

#include "msrs/instance.hpp"

#include <set>
#include <vector>

namespace msrs {

Rat lower_bound_basic(const Instance& inst);
// p(j_m) + p(j_{m+1}) over jobs sorted by decreasing size; 0 with fewer than m+1 jobs
Rat lower_bound_pairs(const Instance& inst);
Rat select_T_53(const Instance& inst);
Rat select_T_32(const Instance& inst);

struct ClassPartition {
    std::set<int> huge;       // some job > 3/4 T
    std::set<int> big;        // some job in (1/2 T, 3/4 T]
    std::set<int> geq34;      // p(c) >= 3/4 T
    std::set<int> heavy;      // geq34 minus (huge u big)
    std::set<int> mid;        // p(c) in (1/2 T, 3/4 T)
    std::set<int> mid_big;    // mid n big
    std::set<int> mid_plain;  // mid minus big
    std::set<int> light;      // p(c) <= 1/2 T
};

ClassPartition classify(const Instance& inst, const Rat& T);

// |C_H| + max{|C_B|, ceil((|C_B| + |heavy|)/2)}
int machine_demand(const ClassPartition& cp);
bool demand_fits(const Instance& inst, const Rat& T);

// candidate list used by select_T_32 (sorted, unique, all >= base)
std::vector<Rat> t32_candidates(const Instance& inst);

}  // namespace msrs
