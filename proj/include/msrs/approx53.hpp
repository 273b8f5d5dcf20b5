#pragma once

#include "msrs/instance.hpp"
#include "msrs/layout.hpp"

namespace msrs {

struct SplitResult {
    std::vector<Job> c1;
    std::vector<Job> c2;
};

// pre: p(c) > 2/3 T, p(c) <= T, no job > T/2
SplitResult split_large_class(const std::vector<Job>& c, const Rat& T);

Schedule schedule_53(const Instance& inst, Trace* trace = nullptr);

}  // namespace msrs
