import os
import sys

import pytest

from fuchsct.algebra.parse import parse_expr
from fuchsct.io import FIXTURES, load_problem

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "oracles"))

_cache = {}


def problem(name):
    if name not in _cache:
        _cache[name] = load_problem(name).build()
    return _cache[name]


@pytest.fixture(scope="session")
def problems():
    return {n: problem(n) for n in FIXTURES}


def P(s):
    return parse_expr(s)


def strs(xs):
    return [str(v) for v in xs]


def polys_of(*ss):
    from fuchsct.algebra.parse import parse_polyx
    return [parse_polyx(s) for s in ss]
