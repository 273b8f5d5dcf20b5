#include "msrs/solve.hpp"

#include "msrs/approx32.hpp"
#include "msrs/approx53.hpp"
#include "msrs/bounds.hpp"

namespace msrs {

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::A53: return "a53";
        case Algorithm::A32: return "a32";
        case Algorithm::Eptas: return "eptas";
        case Algorithm::Exact: return "exact";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& text) {
    if (text == "a53") return Algorithm::A53;
    if (text == "a32") return Algorithm::A32;
    if (text == "eptas") return Algorithm::Eptas;
    if (text == "exact") return Algorithm::Exact;
    throw ContractError("unknown algorithm '" + text + "' (expected a53, a32, eptas or exact)");
}

SolveOutcome solve(Algorithm a, const Instance& inst, const SolveOptions& options) {
    SolveOutcome out;
    out.algorithm = a;
    switch (a) {
        case Algorithm::A53:
            out.schedule = schedule_53(inst, options.trace);
            out.T = inst.num_classes() <= inst.m ? lower_bound_basic(inst) : select_T_53(inst);
            out.guarantee = Rat(5, 3);
            break;
        case Algorithm::A32:
            out.schedule = schedule_32(inst, options.trace);
            out.T = inst.num_classes() <= inst.m ? lower_bound_basic(inst) : select_T_32(inst);
            out.guarantee = Rat(3, 2);
            break;
        case Algorithm::Eptas: {
            EptasResult r = eptas_solve(inst, options.epsilon, options.mode, options.eptas);
            out.schedule = std::move(r.schedule);
            out.T = r.report.T_star;
            const Rat& e = options.epsilon;
            out.guarantee = 1 + 5 * e + 2 * e * e;
            out.eptas = r.report;
            out.nodes = r.report.ip_nodes;
            break;
        }
        case Algorithm::Exact: {
            ExactResult r = solve_exact(inst, options.limits);
            out.exact_status = r.status;
            out.nodes = r.nodes;
            if (r.status != ExactStatus::Optimal) {
                out.ok = false;
                out.T = r.lower;
                return out;
            }
            out.schedule = std::move(r.schedule);
            out.T = r.makespan;
            break;
        }
    }
    out.makespan = makespan(inst, out.schedule);
    return out;
}

}  // namespace msrs
