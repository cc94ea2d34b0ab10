"""Solve and rank probabilistic answer set optimization programs.

Functions taking ``source`` expect program text. ``solve``, ``rank`` and
``explain`` return the same dictionaries the command line prints with
``--format json``.
"""

import json

from ._paso import (
    Error,
    EvalError,
    ParseError,
    ProbInterval,
    ResourceError,
    SemanticError,
    check,
    compose,
    dump_ground,
    format_program,
    truth_leq,
    truth_lt,
)
from . import _paso

__all__ = [
    "Error",
    "EvalError",
    "ParseError",
    "ProbInterval",
    "ResourceError",
    "SemanticError",
    "check",
    "compose",
    "dump_ground",
    "explain",
    "format_program",
    "rank",
    "solve",
    "truth_leq",
    "truth_lt",
]


def solve(source, max_candidates=10_000_000, jobs=1):
    return json.loads(_paso.solve_json(source, max_candidates, jobs))


def rank(source, mode="maximal", max_candidates=10_000_000, jobs=1):
    return json.loads(_paso.rank_json(source, mode, max_candidates, jobs))


def explain(source, max_candidates=10_000_000, jobs=1):
    return json.loads(_paso.explain_json(source, max_candidates, jobs))
