#pragma once

#include "msrs/bounds.hpp"
#include "msrs/instance.hpp"
#include "msrs/layout.hpp"

namespace msrs {

struct SplitParts {
    std::vector<Job> check;
    std::vector<Job> hat;
};

// pre: p(c) >= 3/4 T, p(c) <= T, every job <= 3/4 T
SplitParts split_class_geq34(const std::vector<Job>& c, const Rat& T);
// pre: p(c) in (1/2 T, 3/4 T), every job <= 1/2 T
SplitParts split_class_mid(const std::vector<Job>& c, const Rat& T);

struct ResidualClass {
    int class_id = 0;
    std::vector<Job> jobs;
};

struct ResidualState {
    Rat T;
    std::vector<MachineState> machines;
    std::vector<int> unused;     // empty machines, taken front to back
    std::vector<int> open_huge;  // open machines holding a huge class
    std::vector<ResidualClass> unscheduled;

    std::vector<int> closed() const;
};

// Places every unscheduled class on machines taken from st.unused, nothing finishing after 3/2 T.
void schedule_no_huge(ResidualState& st, Trace* trace = nullptr);
// Fresh-instance form: all m machines unused.
Schedule schedule_no_huge(const Instance& inst, const Rat& T, Trace* trace = nullptr);

Schedule schedule_32(const Instance& inst, Trace* trace = nullptr);

}  // namespace msrs
