from fractions import Fraction

import pytest

import msrs

CLASSES = [[6], [3, 3], [2, 2, 2]]


def test_bounds():
    assert msrs.lower_bound_basic(2, CLASSES) == 9
    assert msrs.select_T_53(2, CLASSES) <= msrs.select_T_32(2, CLASSES)


@pytest.mark.parametrize("algorithm", ["a53", "a32", "eptas", "exact"])
def test_solve_and_validate(algorithm):
    out = msrs.solve(2, CLASSES, algorithm=algorithm)
    assert out["ok"]
    assert out["makespan"] <= out["guarantee"] * out["T"]
    assert len(out["schedule"]) == 6
    assert all(isinstance(start, Fraction) for _, _, start in out["schedule"])
    rep = msrs.validate(2, CLASSES, out["schedule"], allow_extra_machines=algorithm == "eptas")
    assert rep["valid"]
    assert rep["makespan"] == out["makespan"]


def test_exact_optimum():
    assert msrs.solve(2, [[4], [3], [3], [2]], algorithm="exact")["makespan"] == 6


def test_validate_reports_conflicts():
    rows = [(0, 0, Fraction(0)), (1, 1, Fraction(1))]
    rep = msrs.validate(2, [[2, 2]], rows)
    assert not rep["valid"]
    assert rep["violations"][0][0] == "class-overlap"


def test_errors():
    with pytest.raises(ValueError):
        msrs.solve(2, [[1], []])
    with pytest.raises(ValueError):
        msrs.solve(2, [[1]], algorithm="eptas", epsilon="3/4")
    with pytest.raises(ValueError):
        msrs.parse_instance('{"machines": 2, "classes": [[1],, [2]]}')


def test_generate_and_text():
    m, classes = msrs.generate(seed=7, profile="huge-heavy")
    assert (m, classes) == msrs.generate(seed=7, profile="huge-heavy")
    assert msrs.parse_instance(msrs.write_instance(m, classes)) == (m, classes)
    assert "uniform" in msrs.generator_profiles()


def test_hardness():
    clauses = [[1, 2, 3], [1, 2, 3], [-1, -2, -3], [-1, -2, -3]]
    assert '"jobs"' in msrs.reduce(3, clauses)
    r = msrs.verify_gap(3, clauses)
    assert r["verdict"] == "sat-side-4"
    assert len(r["witness"]) == 3


def test_gantt():
    out = msrs.solve(2, CLASSES, algorithm="a32")
    svg = msrs.gantt_svg(2, CLASSES, out["schedule"], title="a32")
    assert svg.startswith("<svg")
