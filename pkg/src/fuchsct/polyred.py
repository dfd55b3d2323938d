"""Polynomial reduction with respect to V = diag(x^tau) W.

phi_V(P) = x^lam e P' + P B maps Laurent vectors P to the numerators of
(P V)' over x^lam e.  Leading terms of its image are eliminated top-down with
the invertible matrix mu lc(e) I + lc_delta(B) (mu > ell), the rest with a
fully reduced echelon basis of phi_V(e_i x^j), floor <= j <= ell.  What is
left lies in the standard complement N_V.
"""

import random
from fractions import Fraction

from .algebra.laurent import LaurentVec
from .algebra.linalg import EchelonReducer, det_poly, inverse, vecmat
from .algebra.paramrat import ZERO as K_ZERO
from .algebra.paramrat import ParamRat
from .algebra.polyx import PolyX, poly_lcm
from .algebra.ratx import ZERO as R_ZERO
from .algebra.ratx import RatX
from .hermite import HermiteError, hermite_reduce


def col_order(key):
    """Degree descending, then component ascending."""
    i, k = key
    return (-k, i)


class PhiContext:
    def __init__(self, V, seed=0):
        self.V = V
        self.n = V.n
        self.lam = V.lam
        self.e = V.e
        self.B = V.B
        self.delta = V.delta
        self.tau = list(V.tau)
        self.lower = -max(0, max(self.tau))
        self._a = [(k, c) for k, c in enumerate(V.a.coeffs()) if c]   # x^lam e
        self._B = [[[(k, c) for k, c in enumerate(b.coeffs()) if c] for b in row]
                   for row in self.B]
        lc_e = self.e.lc()
        self.lc_e = lc_e
        self.B_top = [[b.coeff(self.delta) for b in row] for row in self.B]
        self.ell = compute_ell(self, seed=seed)
        self._lead_inv = {}
        self._ech = None

    # -- the map ------------------------------------------------------------
    def phi(self, P):
        out = {}

        def add(key, v):
            w = out.get(key)
            out[key] = v if w is None else w + v

        for (i, k), c in P.terms.items():
            if k:
                ck = c * k
                for j, a in self._a:
                    add((i, k - 1 + j), ck * a)
            for j in range(self.n):
                for m, b in self._B[i][j]:
                    add((j, k + m), c * b)
        return LaurentVec(self.n, out)

    def top_inverse(self, mu):
        """(mu lc(e) I + lc_delta(B))^-1."""
        inv = self._lead_inv.get(mu)
        if inv is None:
            n = self.n
            A = [[self.B_top[i][j] + (self.lc_e * mu if i == j else K_ZERO)
                  for j in range(n)] for i in range(n)]
            inv = inverse(A)
            self._lead_inv[mu] = inv
        return inv

    @property
    def echelon(self):
        """Echelon basis of phi_V(e_i x^j), lower <= j <= ell (generator id -> (i, j))."""
        if self._ech is None:
            gens, ids = [], []
            for j in range(self.lower, self.ell + 1):
                for i in range(self.n):
                    gens.append(self.phi(LaurentVec(self.n, {(i, j): ParamRat(1)})).terms)
                    ids.append((i, j))
            self._ech = EchelonReducer(gens, col_order)
            self._ech_ids = ids
        return self._ech

    def columns(self):
        """Column keys of the window, from the top degree ell+delta down to the lowest occupied."""
        ech = self.echelon
        lo = min([self.lower] + [k for _, row, _ in ech.rows for (_, k) in row])
        return [(i, k) for k in range(self.ell + self.delta, lo - 1, -1) for i in range(self.n)]

    def echelon_matrix(self):
        cols = self.columns()
        return [[row.get(c, K_ZERO) for c in cols] for _, row, _ in self.echelon.rows]

    def complement_basis(self):
        """Monomials e_i x^k of the window that are not leading terms of the image."""
        piv = set(self.echelon.pivots)
        return [c for c in self.columns() if c not in piv and c[1] >= self.lower]

    def dim_nv(self):
        return len(self.complement_basis())


def phi_V(P, ctx):
    return ctx.phi(P)


# -- ell ---------------------------------------------------------------------

def _int_roots(coeffs):
    """Nonnegative integer roots of a polynomial with Fraction coefficients."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return None  # identically zero
    den = 1
    for c in coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    a = [int(c * den) for c in coeffs]
    roots = set()
    k = 0
    while a[k] == 0:
        k += 1
    if k:
        roots.add(0)
    a = a[k:]
    if len(a) == 1:
        return roots
    # Cauchy bound
    lead = abs(a[-1])
    bound = 1 + max(abs(c) for c in a[:-1]) // lead + 1
    a0 = abs(a[0])
    s = 1
    while s <= bound:
        if a0 % s == 0:
            v = 0
            for c in reversed(a):
                v = v * s + c
            if v == 0:
                roots.add(s)
        s += 1
    return roots


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _charpoly(ctx):
    """det(s lc(e) I + lc_delta(B)) as a polynomial in s."""
    n = ctx.n
    s = PolyX.x()
    A = [[PolyX.const(ctx.B_top[i][j]) + (s.scale(ctx.lc_e) if i == j else PolyX())
          for j in range(n)] for i in range(n)]
    return det_poly(A)


def compute_ell(ctx, seed=0):
    chi = _charpoly(ctx)
    coeffs = chi.coeffs()
    rng = random.Random(seed)
    cand = None
    for _ in range(20):
        t0 = Fraction(rng.randint(2, 97), rng.randint(1, 7))
        try:
            vals = [c(t0) for c in coeffs]
        except ZeroDivisionError:
            continue
        cand = _int_roots(vals)
        if cand is not None:
            break
    if cand is None:
        # chi vanishes at every sampled point: fall back to the generic row
        raise ValueError("cannot isolate eigenvalues of lc(B)")
    good = [s for s in cand if not chi(Fraction(s))]
    return max(good, default=0)


# -- reduction ---------------------------------------------------------------

def nv_reduce(S, ctx):
    """(P1, S2) with S = phi_V(P1) + S2 and S2 in the standard complement."""
    n = ctx.n
    top = ctx.ell + ctx.delta
    S = LaurentVec(n, dict(S.terms))
    P1 = {}
    while S.terms and S.upper > top:
        m = S.upper
        mu = m - ctx.delta
        c = [S.coeff(i, m) for i in range(n)]
        p = vecmat(c, ctx.top_inverse(mu))
        pv = LaurentVec(n, {(i, mu): p[i] for i in range(n) if p[i]})
        S = S - ctx.phi(pv)
        for key, v in pv.terms.items():
            P1[key] = P1.get(key, K_ZERO) + v
    ech = ctx.echelon
    rem, comb = ech.reduce(S.terms)
    for gid, v in comb.items():
        key = ctx._ech_ids[gid]
        P1[key] = P1.get(key, K_ZERO) + v
    return LaurentVec(n, P1), LaurentVec(n, rem)


class AdditiveDecomposition:
    """f = g' + R/d W + Q/(x^lam e) V."""

    def __init__(self, W, V, g, d, R, Q, hermite):
        self.W = W
        self.V = V
        self.g = g
        self.d = d
        self.R = R
        self.Q = Q
        self.hermite = hermite

    def is_zero(self):
        return not any(self.R) and not self.Q

    def q_coords(self):
        """V-coordinates of Q/(x^lam e) V."""
        a = RatX(self.V.a)
        return [r / a if r else R_ZERO for r in self.Q.to_ratx()]

    def remainder_coords(self):
        """W-coordinates of R/d W + Q/(x^lam e) V."""
        dr = RatX(self.d)
        qw = self.V.to_w(self.q_coords())
        return [RatX(r) / dr + q for r, q in zip(self.R, qw)]


def additive_decompose(f, W, V, ctx=None, verify=True):
    ctx = ctx or PhiContext(V)
    hf = hermite_reduce(f, W, verify=verify)
    R, S = hf.split()
    lam = ctx.lam
    St = LaurentVec.from_ratx([RatX(s).shift(lam - t) if s else R_ZERO
                               for s, t in zip(S, V.tau)])
    P1, S2 = nv_reduce(St, ctx)
    g1 = V.to_w(P1.to_ratx())
    g = [a + b for a, b in zip(hf.g, g1)]
    dec = AdditiveDecomposition(W, V, g, hf.d, R, S2, hf)
    if verify:
        c = f if isinstance(f, (list, tuple)) else W.coords(f)
        c = [x if isinstance(x, RatX) else RatX(x) for x in c]
        dg = W.deriv_coords(g)
        rem = dec.remainder_coords()
        if any(ci - a - b for ci, a, b in zip(c, dg, rem)):
            raise HermiteError("additive decomposition identity failed")
    return dec


def common_d(decs):
    d = PolyX.const(1)
    for dec in decs:
        d = poly_lcm(d, dec.d)
    return d


__all__ = ["PhiContext", "phi_V", "compute_ell", "nv_reduce", "AdditiveDecomposition",
           "additive_decompose", "col_order", "common_d"]
