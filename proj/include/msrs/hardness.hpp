#pragma once

#include "msrs/exact.hpp"
#include "msrs/multires.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace msrs {

// Literals are +v / -v for variables 1..vars.
struct Formula322 {
    int vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Empty when the formula is a legal Monotone 3-SAT-(2,2) instance, otherwise the violated invariant.
std::string formula_problem(const Formula322& f);
void check_formula(const Formula322& f);  // ContractError with formula_problem's text

using Assignment = std::vector<bool>;  // index v-1

bool satisfies(const Formula322& f, const Assignment& a);
std::optional<Assignment> find_satisfying(const Formula322& f);
std::int64_t count_models(const Formula322& f);

// Every legal formula on `vars` variables, clauses sorted within and across, sign blocks ordered
// positive first. Stops after `limit` formulas.
std::vector<Formula322> enumerate_legal_formulas(int vars, std::size_t limit = 1'000'000);

struct GadgetMap {
    std::vector<JobId> A, a;                // per clause index
    std::vector<JobId> b, B;                // per variable index
    std::vector<JobId> x, xbar, dx;         // per variable
    std::vector<JobId> d;                   // per clause
    std::vector<std::array<JobId, 3>> lit;  // per clause, in literal order
    std::map<std::string, int> resources;   // name -> resource id
};

std::pair<MultiResourceInstance, GadgetMap> reduce(const Formula322& f);

Schedule schedule_from_assignment(const Formula322& f, const Assignment& a, const GadgetMap& g);
Schedule trivial_schedule_5(const Formula322& f, const GadgetMap& g);
Assignment assignment_from_schedule(const Formula322& f, const MultiResourceInstance& inst, const GadgetMap& g,
                                    const Schedule& s);

// Dummy and anchor jobs sit in their fixed windows (after undoing a global flip).
bool dummy_rigid(const Formula322& f, const GadgetMap& g, const Schedule& s);

enum class GapVerdict { SatSide4, UnsatSide5, Inconclusive };

std::string to_string(GapVerdict v);

struct GapResult {
    GapVerdict verdict = GapVerdict::Inconclusive;
    std::optional<Assignment> witness;
    Schedule schedule;  // makespan-4 or makespan-5 witness schedule
    std::int64_t nodes = 0;
    std::string detail;
};

GapResult verify_gap(const Formula322& f, const SearchLimits& limits = {});

}  // namespace msrs
