import pytest

from fuchsct.algebra.polyx import PolyX
from fuchsct.algebra.ratx import RatX
from fuchsct.basisframe import (BasisFrame, FrameError, build_local_frame,
                                check_gcd_condition, diff_matrix, normalize_at_infinity,
                                tau_bound)
from fuchsct.io import ProblemError
from fuchsct.ore import AModule, OreOp

from conftest import P, strs
from gen import NON_NORMAL, variant


def polys(*ss):
    from fuchsct.algebra.parse import parse_polyx
    return [parse_polyx(s) for s in ss]


def test_diff_matrix_hermite_example(problems):
    W = problems["hermite_example"].W
    assert W.e == polys("(x^2-1)*x")[0]
    assert W.M == [polys("(x-1)*(x+2)", "1"), polys("-x^3-x^2+5*x-4", "x^2-x+2")]
    assert check_gcd_condition(W) and W.e_squarefree()


def test_diff_matrix_integrable(problems):
    W = problems["integrable"].W
    assert W.e == polys("x^3-x")[0]
    assert W.M == [polys("0", "1"), polys("0", "x^2-1/3")]


def test_diff_matrix_trivial():
    A = AModule(OreOp([0, 0, 1]))
    W = BasisFrame(A, [[1], [0, 1]])
    assert W.e == PolyX.const(1)
    assert W.M == [polys("0", "1"), polys("0", "0")]


@pytest.mark.parametrize("name", ["hermite_example", "integrable", "telescoping", "elliptic_moved"])
def test_diff_matrix_identity(problems, name):
    W = problems[name].Wn
    E = RatX(W.e)
    for i, w in enumerate(W.elements):
        lhs = w.deriv().scale(E)
        rhs = W.module.zero()
        for j, wj in enumerate(W.elements):
            rhs = rhs + wj.scale(RatX(W.M[i][j]))
        assert lhs == rhs


def test_t_matrix_reproduces_dt(problems):
    prob = problems["telescoping"]
    W = prob.W
    c = W.coords(prob.module.one())
    assert W.element(W.dt_coords(c)) == prob.module.one().dt()


def test_t_matrix_zero_action():
    A = AModule(OreOp([0, 0, 1]), OreOp([0]))
    W = BasisFrame(A, [[1], [0, 1]])
    assert all(not m for row in W.tM for m in row)


def test_t_matrix_scaling(problems):
    prob = problems["telescoping"]
    W = prob.W
    c = [P("t"), P("t^2+1")]
    Ws = BasisFrame(prob.module, [w.scale(ci) for w, ci in zip(W.elements, c)])
    assert Ws.e == W.e
    E = RatX(W.e)
    for i in range(2):
        for j in range(2):
            expect = c[i] * RatX(W.tM[i][j]) / c[j]
            if i == j:
                expect = expect + E * c[i].deriv_t() / c[i]
            assert RatX(Ws.tM[i][j]) == expect


def test_local_at_infinity_degree(problems):
    for name in ("hermite_example", "integrable", "telescoping", "elliptic", "elliptic_moved"):
        Nu = problems[name].Nu
        assert Nu.is_local_at_infinity()


def test_tau_values(problems):
    assert problems["integrable"].tau == [0, -1]
    assert problems["telescoping"].tau == [-1, -2]
    assert problems["hermite_example"].tau == [-1, -2]


def test_nu_equals_w():
    A = AModule(OreOp([0, 1]))
    W = BasisFrame(A, [[1]])
    Wn, tau, info = normalize_at_infinity(W, W)
    assert Wn is W and tau == [0] and info["iterations"] == 0


def test_local_frame_telescoping(problems):
    prob = problems["telescoping"]
    V = prob.V
    assert V.lam == 1 and V.deg_B() == 3 and V.delta == 3
    assert V.a == polys("x^2*(x^2-1/t^2)")[0]
    # x^lam e V' = B V checked in A
    nus = V.elements()
    A = RatX(V.a)
    for i, nu in enumerate(nus):
        rhs = prob.module.zero()
        for j in range(2):
            rhs = rhs + nus[j].scale(RatX(V.B[i][j]))
        assert nu.deriv().scale(A) == rhs
    assert strs(nus[0].coords) == ["t*x^2 - x", "0"]


def test_local_frame_integrable(problems):
    V = problems["integrable"].V
    assert V.lam == 0 and V.deg_B() <= V.delta


def test_local_frame_zero_tau():
    A = AModule(OreOp([P("-1"), P("x^2+1")]))
    W = BasisFrame(A, [[1]])
    V = build_local_frame(W, [0])
    assert V.lam == 0 and V.B == W.M


def test_vspace(problems):
    prob = problems["integrable"]
    vs = prob.vspace
    assert vs.index == [(0, 0)]
    assert vs.derivative_basis == [[RatX(0), P("1/(x^3-x)")]]
    assert len(problems["telescoping"].vspace) == 0


def test_vspace_integrality(problems):
    for name in ("integrable", "hermite_example", "elliptic_moved"):
        prob = problems[name]
        for c in prob.vspace.basis:
            assert all(ci.is_poly() for ci in c)
            vc = prob.V.from_w(c)
            assert all(not v or v.valuation_inf() >= 0 for v in vc)


@pytest.mark.parametrize("name", sorted(NON_NORMAL))
def test_normalization_non_normal(problems, name):
    prob = variant(name, NON_NORMAL[name])
    info = prob.norm_info
    assert 1 <= info["iterations"] <= 3
    sums = info["sums"]
    assert all(a < b for a, b in zip(sums, sums[1:]))
    assert sums[-1] <= info["bound"] == tau_bound(prob.W)
    assert prob.tau == problems[name].tau


def test_power_basis_rejected():
    with pytest.raises(ProblemError) as exc:
        variant("hermite_example", [["1"], ["0", "1"]])
    assert "not squarefree" in str(exc.value)


def test_not_a_basis():
    with pytest.raises(ProblemError):
        variant("hermite_example", [["1"], ["2"]])
    A = AModule(OreOp([0, 0, 1]))
    with pytest.raises(FrameError):
        BasisFrame(A, [[1], [1]])


def test_diff_matrix_type():
    with pytest.raises(TypeError):
        diff_matrix([1, 2])
