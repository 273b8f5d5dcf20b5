#pragma once

#include "msrs/instance.hpp"
#include "msrs/multires.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msrs {

struct GanttBar {
    int machine = 0;
    Rat start = 0;
    std::int64_t p = 0;
    int color = 0;  // class or resource index
    std::string label;
};

struct GanttOptions {
    std::optional<Rat> T;      // dashed marker at T
    std::optional<Rat> ratio;  // second marker at ratio * T
    std::string title;
};

// One lane per machine, time axis along the bottom.
std::string render_gantt(const std::vector<GanttBar>& bars, int lanes, const GanttOptions& options = {});

// Refuses invalid schedules (ContractError).
std::string render_gantt(const Instance& inst, const Schedule& s, const GanttOptions& options = {});
std::string render_gantt(const MultiResourceInstance& inst, const Schedule& s, const GanttOptions& options = {});

}  // namespace msrs
