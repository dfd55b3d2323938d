"""Hermite reduction with respect to a global integral basis, reduction modulo
U = {v' : v in V}, and the integrability test built on both."""

from .algebra.linalg import EchelonReducer, solve_mod_v, transpose
from .algebra.ops import diophantine_split, squarefree_factorization
from .algebra.paramrat import ZERO as K_ZERO
from .algebra.polyx import PolyX, poly_gcd, poly_lcm
from .algebra.ratx import ZERO as R_ZERO
from .algebra.ratx import RatX


class HermiteError(ValueError):
    pass


class DoubleRootError(ValueError):
    """The integrand lacks a double root at infinity; ``offer`` may hold substituted data."""

    def __init__(self, msg, offer=None):
        super().__init__(msg)
        self.offer = offer


class HermiteForm:
    """f = g' + h with h = sum (h_num_i / D) w_i, D = d e squarefree, gcd(d, e) = 1."""

    def __init__(self, frame, g, h_num, D, d):
        self.frame = frame
        self.g = g
        self.h_num = h_num
        self.D = D
        self.d = d
        self.steps = 0

    @property
    def h(self):
        Dr = RatX(self.D)
        return [RatX(p) / Dr if p else R_ZERO for p in self.h_num]

    def split(self):
        """(R, S) with h = R/d W + S/e W and deg R < deg d."""
        R, S = [], []
        e = self.frame.e
        for p in self.h_num:
            r, s = diophantine_split(p, e, self.d)
            R.append(r)
            S.append(s)
        return R, S


def _as_coords(f, frame):
    if isinstance(f, (list, tuple)):
        return [c if isinstance(c, RatX) else RatX(c) for c in f]
    return frame.coords(f)


def hermite_step(f_num, v, mu, u, frame):
    """One step: sum f_i/(u v^mu) w_i = (sum g_i/v^(mu-1) w_i)' + sum h_i/(u v^(mu-1)) w_i.

    Returns (g, h) as lists of PolyX with deg g_i < deg v.
    """
    n = frame.n
    e, M = frame.e, frame.M
    w = (u * v).divexact(e)
    if w is None:
        raise HermiteError("e does not divide u*v")
    dv = v.deriv()
    k = u * dv * PolyX.const(mu - 1)
    S = [[(w * M[i][j] % v) - (k % v if i == j else PolyX()) for j in range(n)]
         for i in range(n)]
    try:
        g = solve_mod_v(transpose(S), list(f_num), v)
    except ZeroDivisionError:
        raise HermiteError("singular system modulo %s: basis not locally integral "
                           "at a root of v" % v) from None
    Sfull = [[w * M[i][j] - (k if i == j else PolyX()) for j in range(n)] for i in range(n)]
    uv = u * v
    h = []
    for j in range(n):
        acc = f_num[j] - uv * g[j].deriv()
        for i in range(n):
            if g[i] and Sfull[i][j]:
                acc = acc - g[i] * Sfull[i][j]
        q = acc.divexact(v)
        if q is None:
            raise HermiteError("inexact division in Hermite step")
        h.append(q)
    return g, h


def hermite_reduce(f, frame, verify=True):
    n = frame.n
    c = _as_coords(f, frame)
    e = frame.e
    D = e
    for ci in c:
        if ci and not ci.is_poly():
            D = poly_lcm(D, ci.denom)
    Dr = RatX(D)
    f_num = [(ci * Dr).to_polyx() if ci else PolyX() for ci in c]
    g = [R_ZERO] * n
    mult = [[v, m, idx] for idx, (v, m) in enumerate(squarefree_factorization(D))]
    steps = 0
    while True:
        cand = [x for x in mult if x[1] > 1]
        if not cand:
            break
        item = min(cand, key=lambda x: (-x[1], x[0].degree(), x[2]))
        v, mu = item[0], item[1]
        vmu = v ** mu
        u = D.divexact(vmu)
        gs, f_num = hermite_step(f_num, v, mu, u, frame)
        vr = RatX(v ** (mu - 1))
        g = [gi + RatX(p) / vr if p else gi for gi, p in zip(g, gs)]
        D = u * v ** (mu - 1)
        item[1] -= 1
        steps += 1
    D = D.monic() if D.lc() != 1 else D
    d = D.divexact(e)
    # drop factors of d that divide every numerator
    cg = d
    for p in f_num:
        if cg.degree() <= 0:
            break
        cg = poly_gcd(cg, p)
    if cg.degree() > 0:
        d = d.divexact(cg)
        D = D.divexact(cg)
        f_num = [p.divexact(cg) for p in f_num]
    d = d.monic()
    D = (d * e)
    hf = HermiteForm(frame, g, f_num, D, d)
    hf.steps = steps
    if verify:
        res = residual(c, hf)
        if any(res):
            raise HermiteError("Hermite identity f = g' + h failed")
    return hf


def residual(c, hf):
    dg = hf.frame.deriv_coords(hf.g)
    return [ci - a - b for ci, a, b in zip(c, dg, hf.h)]


# -- reduction modulo U -----------------------------------------------------

def _col_order(key):
    i, k = key
    return (-k, i)


def _vec_terms(polys, shift=0):
    out = {}
    for i, p in enumerate(polys):
        for k, cf in enumerate(p.coeffs()):
            if cf:
                out[(i, k + shift)] = cf
    return out


class UReducer:
    """Echelon basis of the numerators (over e) of the derivatives of V."""

    def __init__(self, vspace):
        self.V = vspace
        frame = vspace.W
        e = frame.e
        er = RatX(e)
        gens = []
        for c in vspace.derivative_basis:
            gens.append(_vec_terms([(ci * er).to_polyx() if ci else PolyX() for ci in c]))
        self.ech = EchelonReducer(gens, _col_order)

    def reduce(self, S):
        """(S_red, coefficients over the V basis) with S = S_red + sum c_k e (v_k)'."""
        n = self.V.W.n
        rem, comb = self.ech.reduce(_vec_terms(S))
        polys = [[K_ZERO] for _ in range(n)]
        for (i, k), cf in rem.items():
            row = polys[i]
            if len(row) <= k:
                row.extend([K_ZERO] * (k + 1 - len(row)))
            row[k] = cf
        return [PolyX(p) for p in polys], comb


class Reduced:
    """Canonical reduced form R/d W + S/e W."""

    def __init__(self, frame, d, R, S, g, comb):
        self.frame = frame
        self.d = d
        self.R = R
        self.S = S
        self.g = g
        self.comb = comb

    def is_zero(self):
        return not any(self.R) and not any(self.S)

    def coords(self):
        dr, er = RatX(self.d), RatX(self.frame.e)
        return [RatX(r) / dr + RatX(s) / er for r, s in zip(self.R, self.S)]


def reduce_mod_U(hf, vspace, ured=None):
    """Hermite form -> reduced form; g absorbs the V-preimage of the U part."""
    ured = ured or UReducer(vspace)
    R, S = hf.split()
    S2, comb = ured.reduce(S)
    G = list(hf.g)
    for k, cf in comb.items():
        b = vspace.basis[k]
        G = [a + bb.scale(cf) if bb else a for a, bb in zip(G, b)]
    return Reduced(hf.frame, hf.d, R, S2, G, comb)


def is_integrable(f, frame, vspace, check_infinity=None):
    """(decision, antiderivative coordinates or None).

    ``check_infinity``, if given, is a callable testing the double-root
    hypothesis; a failing check raises DoubleRootError.
    """
    if check_infinity is not None and not check_infinity(f):
        raise DoubleRootError("integrand lacks a double root at infinity; apply "
                              "mobius_substitute and supply new bases")
    hf = hermite_reduce(f, frame)
    red = reduce_mod_U(hf, vspace)
    if red.is_zero():
        return True, red.g
    return False, None


__all__ = ["HermiteForm", "HermiteError", "DoubleRootError", "hermite_step",
           "hermite_reduce", "reduce_mod_U", "is_integrable", "UReducer", "Reduced",
           "residual"]
