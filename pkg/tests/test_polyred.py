from types import SimpleNamespace

from hypothesis import given, settings

from fuchsct.algebra.laurent import LaurentVec
from fuchsct.algebra.paramrat import ParamRat
from fuchsct.algebra.polyx import poly_lcm
from fuchsct.algebra.ratx import RatX
from fuchsct.hermite import is_integrable
from fuchsct.polyred import PhiContext, additive_decompose, compute_ell, nv_reduce, phi_V
from fuchsct.telescope import check_double_root_infinity

from conftest import P, polys_of, problem
from gen import SYSTEMS, has_t, integrable_coords, rand_coords, rand_k, seeds

_ctx = {}


def ctx(name):
    if name not in _ctx:
        _ctx[name] = PhiContext(problem(name).V)
    return _ctx[name]


def K(s):
    return P(s).to_paramrat()


def M_ELL():
    rows = [["1", "0", "0", "0", "0", "2/t^3", "0", "4/t^4", "-4/t^4", "0"],
            ["0", "0", "1", "1/t", "0", "0", "0", "-4/t^3", "4/t^3", "0"],
            ["0", "0", "0", "0", "1", "1/t", "0", "0", "0", "0"],
            ["0", "0", "0", "0", "0", "0", "1", "0", "0", "0"]]
    return [[K(c) for c in r] for r in rows]


def test_context_telescoping():
    c = ctx("telescoping")
    assert (c.lam, c.delta, c.ell, c.lower) == (1, 3, 1, 0)
    assert c.V.deg_B() == 3
    assert c.echelon_matrix() == M_ELL()
    assert c.columns()[:2] == [(0, 4), (1, 4)] and len(c.columns()) == 10


def test_phi_zero():
    assert not phi_V(LaurentVec(2), ctx("telescoping")).terms


def _lv(n, rng, t, lo=-2, hi=4):
    terms = {}
    for _ in range(rng.randint(1, 5)):
        terms[(rng.randrange(n), rng.randint(lo, hi))] = rand_k(rng, t).to_paramrat()
    return LaurentVec(n, terms)


@settings(max_examples=120, deadline=None)
@given(seeds())
def test_phi_identity(rng):
    name = rng.choice(SYSTEMS)
    c = ctx(name)
    V = problem(name).V
    Pv = _lv(c.n, rng, has_t(name))
    lhs = V.element(Pv.to_ratx()).deriv()
    a = RatX(V.a)
    rhs = V.element([q / a for q in phi_V(Pv, c).to_ratx()])
    assert lhs == rhs


def _fake(B_top, lc_e=ParamRat(1)):
    return SimpleNamespace(n=len(B_top), B_top=B_top, lc_e=lc_e)


def test_compute_ell_cases():
    z, one = ParamRat(0), ParamRat(1)
    assert compute_ell(_fake([[z, one], [z, z]])) == 0
    lc = K("t^2+1")
    assert compute_ell(_fake([[K("-3*(t^2+1)"), z], [z, lc]], lc)) == 3
    assert compute_ell(_fake([[K("-5*t"), z], [one, K("-2*t")]], K("t"))) == 5
    assert compute_ell(ctx("telescoping")) == 1
    for seed in range(5):
        assert compute_ell(ctx("telescoping"), seed=seed) == 1


def test_nv_reduce_example():
    c = ctx("telescoping")
    # S~ for f = 1; the monic e carries a factor 1/t^2
    S = LaurentVec.from_ratx([P("(-t^3*x^4-t^2*x^3+3*t*x^2)/t^2"), P("-t*x^3/t^2")])
    P1, S2 = nv_reduce(S, c)
    assert S2.to_ratx() == [RatX(0), P("-x^2/t^2")]
    assert (c.phi(P1) + S2).terms == S.terms


def test_nv_reduce_image_and_idempotent():
    import random
    c = ctx("telescoping")
    rng = random.Random(3)
    for _ in range(20):
        Pv = _lv(2, rng, True, lo=0, hi=5)
        P1, S2 = nv_reduce(c.phi(Pv), c)
        assert not S2.terms
        S = _lv(2, rng, True, lo=0, hi=6)
        _, S2 = nv_reduce(S, c)
        P1b, S3 = nv_reduce(S2, c)
        assert S3.terms == S2.terms and not P1b.terms
        piv = set(c.echelon.pivots)
        assert all(k not in piv and k[1] <= c.ell + c.delta for k in S2.terms)


def _printed_form(q1, q2):
    """(1/(x e)) (q1 nu1 + q2 nu2) with e = x (t^2 x^2 - 1) as V-coordinates."""
    xe = P("x^2*(t^2*x^2-1)")
    return [P(q1) / xe, P(q2) / xe]


def test_decompose_telescoping_iterates():
    prob = problem("telescoping")
    c = ctx("telescoping")
    f = prob.f
    dec = additive_decompose(f, prob.Wn, prob.V, c)
    assert dec.d.degree() == 0 and not any(dec.R)
    assert dec.q_coords() == _printed_form("0", "-x^2")
    df = f.dt()
    dec1 = additive_decompose(df, prob.Wn, prob.V, c)
    assert dec1.hermite.h == [P("1/((t*x+1)*x)"), P("1/((t^2*x^2-1)*x)")]
    assert dec1.q_coords() == _printed_form("-4/t^2", "(t*x+4)*x/t^2")
    d2f = df.dt()
    den = prob.Wn.e
    for cf in prob.Wn.coords(d2f):
        den = poly_lcm(den, cf.denom)
    assert den.monic() == polys_of("(t*x-1)^3*(t*x+1)^2*x")[0].monic()
    dec2 = additive_decompose(d2f, prob.Wn, prob.V, c)
    assert dec2.hermite.steps == 3
    assert dec2.hermite.h == [P("(t^2*x^2+2*t*x-4)/((t^2*x^2-1)*t*x)"),
                              P("2/((t^2*x^2-1)*t*x)")]
    assert dec2.q_coords() == _printed_form("-4/t^3", "2*(t*x+2)*x/t^3")


def test_decompose_integrable_fixture():
    prob = problem("integrable")
    dec = additive_decompose(prob.f, prob.Wn, prob.V, ctx("integrable"))
    assert dec.is_zero()
    assert prob.Wn.deriv_coords(dec.g) == prob.Wn.coords(prob.f)


@settings(max_examples=120, deadline=None)
@given(seeds())
def test_decompose_residual(rng):
    name = rng.choice(SYSTEMS)
    prob = problem(name)
    cf = rand_coords(rng, name)
    dec = additive_decompose(cf, prob.Wn, prob.V, ctx(name), verify=False)
    dg = prob.Wn.deriv_coords(dec.g)
    assert [a - b - r for a, b, r in zip(cf, dg, dec.remainder_coords())] == [RatX(0)] * len(cf)
    assert all(r.degree() < dec.d.degree() for r in dec.R if r)


@settings(max_examples=60, deadline=None)
@given(seeds())
def test_decompose_integrable_by_construction(rng):
    name = rng.choice(SYSTEMS)
    prob = problem(name)
    cf, _ = integrable_coords(rng, name)
    dec = additive_decompose(cf, prob.Wn, prob.V, ctx(name))
    assert dec.is_zero()


@settings(max_examples=120, deadline=None)
@given(seeds())
def test_integrability_equivalence(rng):
    name = rng.choice(SYSTEMS)
    prob = problem(name)
    if rng.random() < 0.5:
        cf, _ = integrable_coords(rng, name)
    else:
        cf = rand_coords(rng, name)
    while not check_double_root_infinity(prob.Wn.element(cf), prob.V):
        cf = [r * P("1/x") for r in cf]
    a, _ = is_integrable(cf, prob.Wn, prob.vspace)
    assert a == additive_decompose(cf, prob.Wn, prob.V, ctx(name)).is_zero()


def test_dim_nv_bound():
    for name in SYSTEMS:
        c = ctx(name)
        depth = c.ell + c.delta - c.lower + 1
        assert c.dim_nv() <= c.n * depth
