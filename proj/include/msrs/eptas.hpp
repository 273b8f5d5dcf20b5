#pragma once

#include "msrs/instance.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace msrs {

enum class EptasMode { FixedM, Augmented };

std::string to_string(EptasMode mode);
// "fixed-m" or "augmented"
EptasMode parse_mode(const std::string& text);

// The layered model or its configuration count outgrew the configured cap.
struct SizeBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The layer IP search ran out of nodes.
struct SearchBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EptasParams {
    Rat epsilon;
    EptasMode mode = EptasMode::Augmented;
    Rat T;
    Rat delta;
    Rat mu;

    static EptasParams make(const Rat& epsilon, EptasMode mode, const Rat& T, const Rat& delta);
};

// class id -> jobs still present
using JobPool = std::map<int, std::vector<Job>>;

JobPool pool_of(const Instance& inst);

// eps, eps^2, ... up to eps^(2m/eps) or eps^(2/eps^2)
std::vector<Rat> delta_candidates(const Rat& epsilon, int m, EptasMode mode);

struct DeltaSums {
    Rat medium;       // jobs with p in (mu T, delta T]
    Rat light_small;  // small mass of classes whose small mass is in (mu T, delta T]
};

DeltaSums delta_sums(const Instance& inst, const Rat& epsilon, const Rat& T, const Rat& delta);
Rat choose_delta(const Instance& inst, const Rat& epsilon, const Rat& T, EptasMode mode);

struct MediumTrace {
    std::map<int, std::vector<Job>> medium;           // removed medium jobs by class
    std::map<int, std::vector<Job>> removed_classes;  // augmented: whole classes
    Rat medium_mass = 0;
    Rat class_mass = 0;
};

std::pair<JobPool, MediumTrace> remove_medium(const Instance& inst, const EptasParams& params);

struct SmallTrace {
    std::map<int, std::vector<Job>> light;  // small mass in (mu T, delta T]
    std::map<int, std::vector<Job>> tiny;   // small mass <= mu T
    Rat L = 0;
};

std::pair<JobPool, SmallTrace> remove_small_light(const JobPool& pool, const EptasParams& params);

// One job of the rounded instance; length in layers.
struct LayerJob {
    int class_id = 0;
    int len = 1;
    JobId job = -1;  // -1 for a placeholder
};

struct LayeredModel {
    Rat xi;
    int layers = 0;         // usable layers 0 .. layers-1
    std::vector<int> P;     // distinct lengths in layers, ascending
    std::vector<LayerJob> jobs;
    std::map<std::pair<int, int>, int> counts;  // (class, len) -> n^(c)_p

    std::size_t num_windows() const;
    // number of conflict-free window selections, saturating at cap
    std::uint64_t count_configurations(std::uint64_t cap) const;
};

struct RoundingTrace {
    std::map<JobId, Job> big;                       // original big jobs
    std::map<JobId, int> rounded;                   // big job -> length in layers
    std::map<int, std::vector<Job>> placeholder_small;  // class -> small jobs replaced by placeholders
    std::map<int, int> placeholders;                // class -> n_c
};

std::pair<LayeredModel, RoundingTrace> round_and_layer(const JobPool& pool, const EptasParams& params);

struct Window {
    int start = 0;
    int len = 1;
    bool operator<(const Window& o) const { return std::tie(start, len) < std::tie(o.start, o.len); }
    bool operator==(const Window& o) const { return start == o.start && len == o.len; }
};

using Configuration = std::vector<Window>;  // sorted by start

struct LayerIpSolution {
    bool feasible = false;
    std::vector<int> start;    // per model job, layer index
    std::vector<int> machine;  // per model job
    std::vector<std::pair<Configuration, int>> x;     // configuration -> x_K, sums to m
    std::map<std::tuple<int, int, int>, int> y;       // (class, start, len) -> y
    std::int64_t nodes = 0;
};

LayerIpSolution solve_layer_ip(const LayeredModel& model, int m, std::int64_t max_nodes = 50'000'000);

// Checks machine count, window coverage, job counts, one window per class and layer, and
// conflict-free configurations. Empty string when all hold.
std::string ip_problem(const LayeredModel& model, int m, const LayerIpSolution& sol);

struct Reinserted {
    Schedule schedule;
    Rat stretched_end = 0;  // makespan of the stretched layered part
    int tiny_fallback = 0;  // tiny classes that found no free slot
};

Reinserted reinsert_small(const LayeredModel& model, const LayerIpSolution& sol, const RoundingTrace& rounding,
                          const SmallTrace& small, const EptasParams& params, int m);

struct EptasOptions {
    std::uint64_t config_cap = 1'000'000'000'000'000'000ULL;
    int max_layers = 2048;
    std::int64_t ip_node_budget = 50'000'000;
    bool compact = true;  // left-shift pass over the final schedule
};

struct EptasReport {
    std::string shortcut;  // "", "single-machine", "one-class-per-machine"
    Rat T_star = 0;
    Rat delta = 0;
    Rat mu = 0;
    Rat xi = 0;
    Rat medium_mass = 0;
    Rat removed_class_mass = 0;
    Rat light_small_mass = 0;
    int removed_classes = 0;
    int extra_machines = 0;
    std::size_t P = 0;
    int layers = 0;
    std::size_t windows = 0;
    std::uint64_t configurations = 0;  // saturated at the cap
    int placeholders = 0;
    int tiny_fallback = 0;
    int guesses = 0;
    std::int64_t ip_nodes = 0;
    Rat bound = 0;  // (1 + 5 eps + 2 eps^2) T*
};

struct EptasResult {
    Schedule schedule;
    EptasReport report;
    Rat makespan = 0;
    int machines_used = 0;
};

// One pipeline run at a fixed guess T; nullopt when the layer IP is infeasible.
std::optional<EptasResult> eptas_attempt(const Instance& inst, const Rat& epsilon, EptasMode mode, const Rat& T,
                                         const EptasOptions& options = {});

EptasResult eptas_solve(const Instance& inst, const Rat& epsilon, EptasMode mode, const EptasOptions& options = {});

// Moves every job to its earliest start on its machine, in order of current start.
void compact(const Instance& inst, Schedule& s);

}  // namespace msrs
