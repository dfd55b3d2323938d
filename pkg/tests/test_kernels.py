import os
import random
import subprocess
import sys

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from fuchsct.algebra import _pykernels as PY
from fuchsct.algebra import kernels

try:
    from fuchsct.algebra import _ckernels as CY
except ImportError:  # extension not built
    CY = None

t, x = sp.symbols("t x")


def _norm_u(cs):
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs) or (1,)


u_poly = st.lists(st.integers(-6, 6), min_size=1, max_size=4).map(_norm_u)
b_poly = st.lists(u_poly, min_size=1, max_size=4).map(tuple)


def _norm_b(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return tuple(tuple(u) for u in a)


def to_sp_u(u):
    return sum(c * t ** i for i, c in enumerate(u))


def to_sp_b(a):
    return sp.expand(sum(to_sp_u(u) * x ** i for i, u in enumerate(a)))


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_fallback_end_to_end():
    code = ("from fuchsct.algebra.kernels import BACKEND\n"
            "from fuchsct.io import load_problem\n"
            "from fuchsct.telescope import telescope_polyred\n"
            "p = load_problem('telescoping').build()\n"
            "print(BACKEND, telescope_polyred(p.f, p.Wn, p.V).strings())\n")
    env = dict(os.environ, FUCHSCT_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.strip()
    assert out == "python ['1', '-t', 't^2']"


@pytest.mark.skipif(CY is None, reason="compiled kernels not available")
@settings(max_examples=150, deadline=None)
@given(b_poly, b_poly, b_poly)
def test_parity_bivariate(a, b, c):
    a, b, c = _norm_b(a), _norm_b(b), _norm_b(c)
    A, B = PY.b_mul(a, c), PY.b_mul(b, c)
    for name in ("b_add", "b_sub", "b_mul", "b_gcd", "b_prem"):
        if name == "b_prem" and not B:
            continue
        assert getattr(PY, name)(A, B) == getattr(CY, name)(A, B), name
    assert PY.b_content(A) == CY.b_content(A)
    assert PY.b_deriv_x(A) == CY.b_deriv_x(A)
    assert PY.b_deriv_t(A) == CY.b_deriv_t(A)
    if B:
        assert PY.b_pdivrem(A, B) == CY.b_pdivrem(A, B)


@pytest.mark.skipif(CY is None, reason="compiled kernels not available")
@settings(max_examples=150, deadline=None)
@given(u_poly, u_poly, u_poly)
def test_parity_univariate(a, b, c):
    A, B = PY.u_mul(a, c), PY.u_mul(b, c)
    for name in ("u_add", "u_sub", "u_mul", "u_gcd", "u_prem"):
        assert getattr(PY, name)(A, B) == getattr(CY, name)(A, B), name
    assert PY.u_content(A) == CY.u_content(A)
    assert PY.u_eval(A, 3) == CY.u_eval(A, 3)


@settings(max_examples=100, deadline=None)
@given(b_poly, b_poly, b_poly)
def test_gcd_against_sympy(a, b, c):
    a, b, c = _norm_b(a), _norm_b(b), _norm_b(c)
    A, B = kernels.b_mul(a, c), kernels.b_mul(b, c)
    g = to_sp_b(kernels.b_gcd(A, B))
    ref = sp.gcd(to_sp_b(A), to_sp_b(B))
    assert sp.expand(g - ref) == 0 or sp.expand(g + ref) == 0


def test_divexact_recovers_factor():
    rng = random.Random(5)
    for _ in range(50):
        a = tuple(tuple(rng.randint(-4, 4) for _ in range(3)) + (1,) for _ in range(3))
        c = ((1, 2), (0, 1), (3,))
        assert kernels.b_divexact(kernels.b_mul(a, c), c) == a


def test_pdivrem_identity():
    a = ((1, 2), (0, 1), (3, 1), (1,))
    b = ((2,), (1, 1))
    q, r = kernels.b_pdivrem(a, b)
    k = len(a) - len(b) + 1
    lcb = b[-1]
    lhs = a
    for _ in range(k):
        lhs = kernels.b_mul(lhs, (lcb,))
    assert kernels.b_add(kernels.b_mul(q, b), r) == lhs
    assert len(r) < len(b)
