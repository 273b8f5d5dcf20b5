#pragma once

#include "msrs/instance.hpp"
#include "msrs/multires.hpp"

#include <chrono>
#include <cstdint>

namespace msrs {

struct SearchLimits {
    std::int64_t max_nodes = 200'000'000;
    std::chrono::milliseconds time_budget{0};  // 0 = unlimited
    std::int64_t horizon = -1;                 // upper end of the makespan search, -1 = sum of p
};

enum class ExactStatus { Optimal, InfeasibleAtBound, BudgetExhausted };

std::string to_string(ExactStatus s);

struct ExactResult {
    ExactStatus status = ExactStatus::BudgetExhausted;
    std::int64_t makespan = -1;  // when Optimal
    Schedule schedule;           // when Optimal
    std::int64_t lower = 0;      // best proven bounds (solve_exact)
    std::int64_t upper = -1;
    std::int64_t nodes = 0;
};

// Optimal: a schedule with makespan <= K exists and is returned.
ExactResult decide_makespan(const MultiResourceInstance& inst, std::int64_t K, const SearchLimits& limits = {});
ExactResult decide_makespan(const Instance& inst, std::int64_t K, const SearchLimits& limits = {});

// Minimum makespan by binary search over K.
ExactResult solve_exact(const MultiResourceInstance& inst, const SearchLimits& limits = {});
ExactResult solve_exact(const Instance& inst, const SearchLimits& limits = {});

// Greedy earliest-start list schedule; always feasible, used as the initial upper bound.
Schedule list_schedule(const MultiResourceInstance& inst);

}  // namespace msrs
