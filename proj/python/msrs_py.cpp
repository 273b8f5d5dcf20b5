#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msrs/bounds.hpp"
#include "msrs/gantt.hpp"
#include "msrs/generate.hpp"
#include "msrs/hardness.hpp"
#include "msrs/io.hpp"
#include "msrs/solve.hpp"

namespace py = pybind11;
using namespace msrs;

namespace {

using Classes = std::vector<std::vector<std::int64_t>>;
using Rows = std::vector<std::tuple<int, int, py::object>>;  // (job, machine, start)

py::object frac(const Rat& r) { return py::module_::import("fractions").attr("Fraction")(to_string(r)); }

Rat from_py(const py::handle& h) { return parse_rat(py::str(h)); }

Rows rows_of(const Schedule& s) {
    Rows out;
    for (auto& [id, pl] : s.entries) out.emplace_back(id, pl.machine, frac(pl.start));
    return out;
}

Schedule schedule_of(const Rows& rows) {
    Schedule s;
    for (auto& [id, machine, start] : rows) s.place(id, machine, from_py(start));
    return s;
}

py::dict outcome(const SolveOutcome& o) {
    py::dict d;
    d["algorithm"] = to_string(o.algorithm);
    d["ok"] = o.ok;
    d["makespan"] = frac(o.makespan);
    d["T"] = frac(o.T);
    d["guarantee"] = frac(o.guarantee);
    d["schedule"] = rows_of(o.schedule);
    d["machines_used"] = o.schedule.machines_used();
    if (o.exact_status) d["exact_status"] = to_string(*o.exact_status);
    if (o.eptas) {
        d["T_star"] = frac(o.eptas->T_star);
        d["delta"] = frac(o.eptas->delta);
        d["bound"] = frac(o.eptas->bound);
        d["extra_machines"] = o.eptas->extra_machines;
    }
    return d;
}

Formula322 formula_of(int vars, const std::vector<std::array<int, 3>>& clauses) { return {vars, clauses}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "makespan scheduling with one shared resource per job";

    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeBudgetError>(m, "SizeBudgetError", PyExc_RuntimeError);
    py::register_exception<SearchBudgetError>(m, "SearchBudgetError", PyExc_RuntimeError);

    m.def("lower_bound_basic", [](int machines, const Classes& c) { return frac(lower_bound_basic(Instance::from_sizes(machines, c))); },
          py::arg("machines"), py::arg("classes"));
    m.def("select_T_53", [](int machines, const Classes& c) { return frac(select_T_53(Instance::from_sizes(machines, c))); },
          py::arg("machines"), py::arg("classes"));
    m.def("select_T_32", [](int machines, const Classes& c) { return frac(select_T_32(Instance::from_sizes(machines, c))); },
          py::arg("machines"), py::arg("classes"));

    m.def(
        "solve",
        [](int machines, const Classes& c, const std::string& algorithm, const py::object& epsilon,
           const std::string& mode, std::int64_t max_nodes) {
            SolveOptions o;
            o.epsilon = from_py(epsilon);
            o.mode = parse_mode(mode);
            o.limits.max_nodes = max_nodes;
            Instance inst = Instance::from_sizes(machines, c);
            SolveOutcome out;
            {
                py::gil_scoped_release nogil;
                out = solve(parse_algorithm(algorithm), inst, o);
            }
            return outcome(out);
        },
        py::arg("machines"), py::arg("classes"), py::arg("algorithm") = "a32", py::arg("epsilon") = "1/2",
        py::arg("mode") = "augmented", py::arg("max_nodes") = 200'000'000,
        "Run a53, a32, eptas or exact. Starts and ratios come back as fractions.Fraction.");

    m.def(
        "validate",
        [](int machines, const Classes& c, const Rows& rows, bool allow_extra_machines) {
            Instance inst = Instance::from_sizes(machines, c);
            auto rep = validate(inst, schedule_of(rows), allow_extra_machines);
            py::dict d;
            d["valid"] = rep.valid;
            d["makespan"] = frac(rep.makespan);
            std::vector<std::tuple<std::string, int, int>> v;
            for (auto& x : rep.violations) v.emplace_back(to_string(x.kind), x.a, x.b);
            d["violations"] = v;
            return d;
        },
        py::arg("machines"), py::arg("classes"), py::arg("schedule"), py::arg("allow_extra_machines") = false);

    m.def(
        "generate",
        [](std::uint64_t seed, const std::string& profile, int max_jobs, std::int64_t p_max) {
            GeneratorSpec s;
            s.seed = seed;
            s.profile = profile;
            s.max_jobs = max_jobs;
            s.p_max = p_max;
            Instance inst = generate(s);
            return std::make_pair(inst.m, inst.sizes());
        },
        py::arg("seed") = 1, py::arg("profile") = "uniform", py::arg("max_jobs") = 16, py::arg("p_max") = 10);
    m.def("generator_profiles", &generator_profiles);

    m.def(
        "gantt_svg",
        [](int machines, const Classes& c, const Rows& rows, const std::string& title) {
            GanttOptions o;
            o.title = title;
            return render_gantt(Instance::from_sizes(machines, c), schedule_of(rows), o);
        },
        py::arg("machines"), py::arg("classes"), py::arg("schedule"), py::arg("title") = "");

    m.def(
        "reduce",
        [](int vars, const std::vector<std::array<int, 3>>& clauses) {
            auto [inst, g] = reduce(formula_of(vars, clauses));
            return write_multires(inst);
        },
        py::arg("vars"), py::arg("clauses"), "Hardness gadget instance as multi-resource JSON text.");
    m.def(
        "verify_gap",
        [](int vars, const std::vector<std::array<int, 3>>& clauses) {
            Formula322 f = formula_of(vars, clauses);
            GapResult r;
            {
                py::gil_scoped_release nogil;
                r = verify_gap(f);
            }
            py::dict d;
            d["verdict"] = to_string(r.verdict);
            d["detail"] = r.detail;
            if (r.witness) d["witness"] = std::vector<bool>(r.witness->begin(), r.witness->end());
            return d;
        },
        py::arg("vars"), py::arg("clauses"));

    m.def("parse_instance", [](const std::string& text) {
        Instance inst = parse_instance(text);
        return std::make_pair(inst.m, inst.sizes());
    });
    m.def("write_instance", [](int machines, const Classes& c) { return write_instance(Instance::from_sizes(machines, c)); });
}
