import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuchsct.algebra.paramrat import ParamRat
from fuchsct.algebra.ratx import RatX
from fuchsct.ore import (AModule, InconsistentAction, OreOp, clear_op, mobius_integrand,
                         mobius_substitute, op_mul, reduce_mod_L)

from conftest import P, problem

X = RatX.x()
coef = st.sampled_from(["0", "1", "x", "t", "x^2-t", "1/x", "(x+t)/(x-1)", "3*x/2"]).map(P)
ops = st.lists(coef, min_size=1, max_size=4).map(OreOp)


def D(k=1):
    return OreOp([0] * k + [1])


def test_op_mul_examples():
    assert op_mul(D(), OreOp([X])) == OreOp([1, X])
    assert op_mul(D(), D()) == D(2)
    xd = OreOp([0, X])
    assert op_mul(xd, xd) == OreOp([0, X, X * X])


@settings(max_examples=100, deadline=None)
@given(ops, ops, ops)
def test_op_mul_associative_distributive(a, b, c):
    assert op_mul(op_mul(a, b), c) == op_mul(a, op_mul(b, c))
    assert op_mul(a, b + c) == op_mul(a, b) + op_mul(a, c)


def test_apply_is_action():
    a, b = OreOp([P("x"), P("x^2")]), OreOp([P("1"), P("0"), P("x")])
    y = P("1/(x+1)")
    assert op_mul(a, b).apply(y) == a.apply(b.apply(y))


def test_reduce_examples(problems):
    A = problems["hermite_example"].module
    L = A.L
    assert reduce_mod_L(L, L).is_zero()
    assert A.reduce(OreOp([1])) == A.one()
    l0, l1, l2 = L.coeffs
    assert A.reduce(D(2)).coords == (-l0 / l2, -l1 / l2)


@settings(max_examples=100, deadline=None)
@given(ops, ops, coef)
def test_reduce_is_module_morphism(p, q, r):
    A = problem("hermite_example").module
    assert A.reduce(p + q) == A.reduce(p) + A.reduce(q)
    assert A.reduce(p.lmul(r)) == A.reduce(p).scale(r)


@settings(max_examples=100, deadline=None)
@given(st.lists(coef, min_size=2, max_size=2), coef,
       st.sampled_from(["hermite_example", "telescoping"]))
def test_x_derivative_leibniz(cs, c, name):
    A = problem(name).module
    f = A.element(cs)
    assert f.scale(c).deriv() == f.deriv().scale(c) + f.scale(c.deriv())


@settings(max_examples=100, deadline=None)
@given(st.lists(coef, min_size=2, max_size=2), coef)
def test_t_derivative_commutes_and_leibniz(cs, c):
    A = problem("telescoping").module
    f = A.element(cs)
    assert f.deriv().dt() == f.dt().deriv()
    assert f.scale(c).dt() == f.dt().scale(c) + f.scale(c.deriv_t())
    k = P("t^2+1")
    assert f.scale(k).dt() == f.dt().scale(k) + f.scale(P("2*t"))


def test_t_derivative_examples(problems):
    A = problems["telescoping"].module
    f = A.one()
    assert f.dt().coords == (P("2*t*x^2+x"), P("t*x^3"))
    f2 = f.dt().dt()
    assert f2.coords[1] == P("(t*x+1)*x^3/(1-t*x)")
    assert f2.coords[0] == P("-x^2*(2*t^4*x^4+5*t^3*x^3+2*t^2*x^2-5*t*x-3)/(t^2*x^2-1)^2")


def test_inconsistent_action_rejected(problems):
    L = problems["telescoping"].module.L
    with pytest.raises(InconsistentAction):
        AModule(L, OreOp([P("x"), P("t*x^3")]))


def _equivalent(a, b):
    a, b = clear_op(a), clear_op(b)
    return a.order == b.order and \
        OreOp([c / a.coeffs[-1] for c in a.coeffs]) == OreOp([c / b.coeffs[-1] for c in b.coeffs])


def test_mobius_examples(problems):
    assert _equivalent(mobius_substitute(D(), 0), D())
    L = OreOp([-1, X])                      # solution x
    Lt = mobius_substitute(L, 0)
    assert Lt.apply(X.inv()) == RatX(0)
    assert _equivalent(Lt, OreOp([1, X]))
    Lh = problems["hermite_example"].module.L
    assert _equivalent(mobius_substitute(mobius_substitute(Lh, 0), 0), Lh)


def test_mobius_moves_elliptic(problems):
    orig = problems["elliptic"].module
    moved = problems["elliptic_moved"].module
    assert _equivalent(mobius_substitute(orig.L, 2), moved.L)
    assert mobius_integrand(OreOp([1]), 2) == OreOp([-(X ** -2)])


def test_mobius_solution_transform():
    # y = x^2 + t solves L = (x^2+t) D - 2x; after x -> 3 + 1/x the solution is (3+1/x)^2 + t
    L = OreOp([P("-2*x"), P("x^2+t")])
    y = P("(3+1/x)^2+t")
    assert mobius_substitute(L, 3).apply(y) == RatX(0)
    assert mobius_substitute(L, ParamRat(3)) == mobius_substitute(L, 3)
