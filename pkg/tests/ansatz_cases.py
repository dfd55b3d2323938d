"""Instances for the ansatz cross-check, shared by the oracle and acceptance suites."""

import json
import random
from functools import lru_cache

from fuchsct.hermite import hermite_reduce, is_integrable
from fuchsct.io import fixture_path
from fuchsct.polyred import additive_decompose
from fuchsct.telescope import check_double_root_infinity

from ansatz_oracle import check, find_antiderivative
from conftest import P, problem
from gen import integrable_coords, rand_coords

CAP = 12
COUNT = 24


def instance(k):
    name = ("hermite_example", "integrable")[k % 2]
    rng = random.Random(1000 + k)
    prob = problem(name)
    if k == 0:
        c = hermite_reduce(prob.Wn.coords(prob.f), prob.Wn).h
    elif k % 4 in (1, 2):
        c, _ = integrable_coords(rng, name)
    else:
        c = rand_coords(rng, name, deg=2, maxmult=2)
        # the decision procedure assumes a double root at infinity
        while not check_double_root_infinity(prob.Wn.element(c), prob.V):
            c = [v * P("1/x") for v in c]
    return name, c


@lru_cache(maxsize=None)
def compare(k):
    """(library decision, polyred decision, oracle found, both antiderivatives check)."""
    name, c = instance(k)
    prob = problem(name)
    L = json.load(open(fixture_path(name)))["L"]
    f = [str(v) for v in prob.Wn.element(c).coords]
    ok, G = is_integrable(c, prob.Wn, prob.vspace)
    ok2 = additive_decompose(c, prob.Wn, prob.V).is_zero()
    G0 = find_antiderivative(L, f, cap=CAP)
    checks = True
    if G0 is not None:
        checks = check(L, f, G0)
    if ok:
        checks = checks and check(L, f, [str(v) for v in prob.Wn.element(G).coords])
    return ok, ok2, G0 is not None, checks
