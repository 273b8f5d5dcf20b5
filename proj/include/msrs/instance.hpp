#pragma once

#include "msrs/rat.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace msrs {

using JobId = int;

struct Job {
    JobId id = 0;
    int class_id = 0;
    std::int64_t p = 1;
};

// Precondition violated by the caller.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Schedule that does not even describe the instance (unknown or missing job, negative start).
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Instance {
    int m = 1;
    // class_id == index; every class non-empty, all p >= 1
    std::vector<std::vector<Job>> classes;
    // p = 0 jobs removed at ingestion, re-added at (0, 0) by finalize()
    std::vector<Job> zero_jobs;

    // Ids are handed out in reading order. Zero sizes are rejected unless allow_zero.
    static Instance from_sizes(int m, const std::vector<std::vector<std::int64_t>>& sizes,
                               bool allow_zero = false);

    int num_classes() const { return static_cast<int>(classes.size()); }
    int num_jobs() const;
    std::int64_t total() const;
    std::int64_t class_total(int c) const;
    std::vector<Job> jobs() const;
    std::vector<std::vector<std::int64_t>> sizes() const;
};

struct Placement {
    int machine = 0;
    Rat start = 0;
};

struct Schedule {
    std::map<JobId, Placement> entries;

    void place(JobId id, int machine, const Rat& start) { entries[id] = Placement{machine, start}; }
    std::size_t size() const { return entries.size(); }
    bool contains(JobId id) const { return entries.count(id) != 0; }
    const Placement& at(JobId id) const { return entries.at(id); }
    int machines_used() const;
};

enum class ViolationKind { MachineOverlap, ClassOverlap, MachineOutOfRange, ResourceOverlap };

std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    JobId a;
    JobId b;  // -1 for single-job violations
};

struct ValidationReport {
    bool valid = true;
    Rat makespan = 0;
    std::vector<Violation> violations;
};

// Throws StructuralError on unknown / missing jobs or negative starts.
// allow_extra_machines: machine indices >= m are not reported (augmented EPTAS output).
ValidationReport validate(const Instance& inst, const Schedule& s, bool allow_extra_machines = false);

Rat makespan(const Instance& inst, const Schedule& s);

// Adds the stripped zero-size jobs at machine 0, start 0.
void finalize(const Instance& inst, Schedule& s);

// Per-class machines, used when m >= number of classes.
Schedule one_class_per_machine(const Instance& inst);

// Every job on machine 0, back to back.
Schedule sequential(const Instance& inst);

}  // namespace msrs
