#pragma once

#include "msrs/instance.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace msrs {

// Jobs of one class run back to back.
struct Block {
    int class_id = -1;
    std::vector<Job> jobs;
    std::int64_t len = 0;

    Block() = default;
    Block(int cid, std::vector<Job> js);
};

// bottom grows upward from 0, top grows downward from the ceiling
struct MachineState {
    int index = 0;
    std::vector<Block> bottom;
    std::vector<Block> top;  // top[0] ends at the ceiling
    std::int64_t load = 0;
    bool closed = false;
    // when set, overrides bottom/top with explicit (block, start) pairs
    std::vector<std::pair<Block, Rat>> fixed;

    bool empty() const { return load == 0; }
    void push_bottom(Block b);
    void push_front_bottom(Block b);
    void push_top(Block b);
    // everything moved against the ceiling, relative order kept
    void lift();
    // blocks in time order with their starts
    std::vector<std::pair<Block, Rat>> timeline(const Rat& ceiling) const;
};

void emit(const MachineState& ms, const Rat& ceiling, Schedule& out);

// Overlap check among already placed jobs plus a limit on completion times.
// Returns an empty string when fine, otherwise a description of the first problem.
std::string partial_problem(const std::vector<MachineState>& machines, const Rat& ceiling, const Rat& limit);

struct ClaimCheck {
    std::string step;
    std::string claim;
    bool holds = true;
};

struct Trace {
    std::vector<ClaimCheck> checks;
    std::vector<std::string> notes;
    bool all_hold() const;
    std::string render() const;
};

// Evaluates claims when a trace is attached or in builds without NDEBUG.
// A failing claim throws std::logic_error.
class ClaimSink {
public:
    explicit ClaimSink(Trace* t) : trace_(t) {}
    bool active() const;
    void check(const std::string& step, const std::string& claim, const std::function<bool()>& pred);
    void note(const std::string& text);

private:
    Trace* trace_;
};

std::int64_t total_of(const std::vector<Job>& jobs);
std::vector<Job> sorted_desc(std::vector<Job> jobs);

}  // namespace msrs
