from pathlib import Path

import pytest

import paso

DATA = Path(__file__).resolve().parent.parent / "data"


def read(name):
    return (DATA / name).read_text()


def test_interval_and_truth_order():
    a = paso.ProbInterval("0.2", "0.3")
    b = paso.ProbInterval("0.4", "0.5")
    assert paso.truth_leq(a, b)
    assert not paso.truth_leq(b, a)
    assert paso.ProbInterval.point("0.7") == paso.ProbInterval("0.7", "0.7")
    assert str(paso.ProbInterval("1/3", "1/2")) == "[1/3,0.5]"
    with pytest.raises(paso.EvalError):
        paso.ProbInterval("0.6", "0.4")


def test_compose():
    pts = [paso.ProbInterval.point("0.7"), paso.ProbInterval.point("0.4")]
    assert paso.compose("pcd", "disjunctive", pts) == paso.ProbInterval.point("0.7")
    half = [paso.ProbInterval.point("0.5"), paso.ProbInterval.point("0.4")]
    assert paso.compose("ind", "conjunctive", half) == paso.ProbInterval.point("0.2")
    with pytest.raises(ValueError):
        paso.compose("nope", "disjunctive", pts)


def test_solve_intro():
    doc = paso.solve(read("intro.paso"))
    sets = {tuple((e["formula"], tuple(e["interval"])) for e in s["entries"]) for s in doc["answer_sets"]}
    assert sets == {
        (("service(a,s1,d)", ("0.7", "0.7")),),
        (("service(a,s2,d)", ("0.4", "0.4")),),
    }
    assert "ranking" not in doc


def test_rank_roster():
    doc = paso.rank(read("nurse_example2.paso"), mode="maximal")
    assert doc["ranking"]["strata"] == [["h8"], ["h4", "h6", "h7"], ["h2", "h3", "h5"], ["h1"]]
    pareto = paso.rank(read("nurse_example2.paso"), mode="pareto")
    assert pareto["ranking"]["top"] == ["h8"]
    assert "strata" not in pareto["ranking"]


def test_explain_roster():
    doc = paso.explain(read("nurse_example2.paso"))
    row = [c["index"] for c in doc["satisfaction"] if c["set"] == "h1"]
    assert row == [2, 2, 1, 2]


def test_errors():
    with pytest.raises(paso.ParseError):
        paso.solve("a :- ")
    with pytest.raises(paso.SemanticError):
        paso.solve("p(X) :- not q(X).")
    with pytest.raises(paso.ResourceError):
        paso.solve(read("nurse_example2.paso"), max_candidates=10)
    assert paso.check("p(X) :- not q(X).") != []
    assert paso.check(read("nurse_example2.paso")) == []


def test_format_round_trip():
    text = paso.format_program(read("nurse_example2.paso"))
    assert paso.format_program(text) == text
    assert "inconsistent" in paso.dump_ground(read("intro.paso") + "inconsistent :- not inconsistent, x.")
