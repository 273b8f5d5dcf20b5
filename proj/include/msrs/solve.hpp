#pragma once

#include "msrs/eptas.hpp"
#include "msrs/exact.hpp"
#include "msrs/layout.hpp"

#include <optional>
#include <string>

namespace msrs {

enum class Algorithm { A53, A32, Eptas, Exact };

std::string to_string(Algorithm a);
// "a53", "a32", "eptas", "exact"
Algorithm parse_algorithm(const std::string& text);

struct SolveOptions {
    Rat epsilon = Rat(1, 2);
    EptasMode mode = EptasMode::Augmented;
    EptasOptions eptas;
    SearchLimits limits;
    Trace* trace = nullptr;  // a53 / a32 claim checks
};

struct SolveOutcome {
    Algorithm algorithm = Algorithm::A53;
    Schedule schedule;
    bool ok = true;       // false: exact oracle gave up
    Rat makespan = 0;
    Rat T = 0;            // the bound the guarantee refers to (select_T, T*, or OPT)
    Rat guarantee = 1;    // makespan <= guarantee * T
    std::optional<EptasReport> eptas;
    std::optional<ExactStatus> exact_status;
    std::int64_t nodes = 0;
};

SolveOutcome solve(Algorithm a, const Instance& inst, const SolveOptions& options = {});

}  // namespace msrs
