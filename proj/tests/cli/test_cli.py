import json
import os
import subprocess
from pathlib import Path

import pytest

BIN = os.environ.get("PASO_BIN")
DATA = Path(__file__).resolve().parent.parent / "data"

pytestmark = pytest.mark.skipif(not BIN, reason="PASO_BIN not set")


def paso(*args, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, env=full_env)


def test_solve_intro_text():
    r = paso("solve", DATA / "intro.paso")
    assert r.returncode == 0
    lines = sorted(r.stdout.splitlines())
    assert lines == ["h1 = {service(a,s2,d):0.4}", "h2 = {service(a,s1,d):0.7}"]


def test_rank_roster_text():
    r = paso("rank", DATA / "nurse_example2.paso")
    assert r.returncode == 0
    tail = r.stdout.rstrip("\n").split("ranking (maximal):\n")[1].splitlines()
    assert tail == ["h8", "h4 = h6 = h7", "h2 = h3 = h5", "h1"]


def test_rank_pareto_json_has_no_strata():
    r = paso("rank", "--mode", "pareto", "--format", "json", DATA / "nurse_example2.paso")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["ranking"]["mode"] == "pareto"
    assert "strata" not in doc["ranking"]
    assert doc["ranking"]["top"] == ["h8"]
    assert doc["incomparable_pairs"]


def test_cycle_reports_no_total_order():
    r = paso("rank", DATA / "cycle.paso")
    assert r.returncode == 0
    assert "no total order" in r.stdout
    assert "cyclic" in r.stdout


def test_check_counts():
    r = paso("check", DATA / "intro.paso")
    assert r.returncode == 0
    assert r.stdout.strip() == "ok: 1 generator rules, 0 preference rules, 1 ground rules"


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.paso"
    bad.write_text("a :- \n")
    r = paso("solve", bad)
    assert r.returncode == 2
    assert r.stderr.startswith(f"{bad}:")

    unsafe = tmp_path / "unsafe.paso"
    unsafe.write_text("p(X) :- not q(X).\n")
    assert paso("solve", unsafe).returncode == 3

    r = paso("solve", DATA / "unsat.paso")
    assert r.returncode == 4
    assert "no answer sets" in r.stderr

    assert paso("solve", tmp_path / "missing.paso").returncode == 1
    assert paso("bogus").returncode == 1

    assert paso("solve", "--max-candidates", 10, DATA / "nurse_example2.paso").returncode == 5
    r = paso("solve", DATA / "nurse_example2.paso", env={"PASO_MAX_CANDIDATES": "10"})
    assert r.returncode == 5


def test_jobs_do_not_change_output():
    one = paso("explain", "--jobs", 1, DATA / "nurse_example2.paso")
    four = paso("explain", "--jobs", 4, DATA / "nurse_example2.paso")
    assert one.returncode == four.returncode == 0
    assert one.stdout == four.stdout
