"""Bases of A with their differentiation data.

A frame W = (w_1..w_n) carries e, M with e W' = M W (e monic, gcd(e, M) = 1)
and, when a t-action is present, tM with e dt.W = tM W.  Normalization at
infinity produces exponents tau with x^tau_i w_i integral at infinity; the
local frame V = diag(x^tau) W then satisfies x^lam e V' = B V.
"""

from .algebra.linalg import inverse, left_nullspace, rank, vecmat
from .algebra.ops import squarefree_part
from .algebra.polyx import ONE as P_ONE
from .algebra.polyx import PolyX, poly_gcd, poly_lcm
from .algebra.ratx import ZERO as R_ZERO
from .algebra.ratx import RatX
from .ore import AElement, OreOp, clear_op


class FrameError(ValueError):
    pass


def _to_elements(module, W):
    out = []
    for w in W:
        if isinstance(w, AElement):
            out.append(w)
        elif isinstance(w, OreOp):
            out.append(module.reduce(w))
        else:
            out.append(module.reduce(OreOp(w)))
    return out


def _clear(rows):
    """Monic lcm e of all denominators and the polynomial matrix e*rows."""
    e = P_ONE
    for r in rows:
        for v in r:
            if v and not v.is_poly():
                e = poly_lcm(e, v.denom)
    Er = RatX(e)
    return e, [[(v * Er).to_polyx() if v else PolyX() for v in r] for r in rows]


class BasisFrame:
    def __init__(self, module, W, name="W", tags=()):
        self.module = module
        self.name = name
        self.elements = _to_elements(module, W)
        if len(self.elements) != module.n:
            raise FrameError("basis must have %d elements, got %d"
                             % (module.n, len(self.elements)))
        self.C = [list(w.coords) for w in self.elements]
        try:
            self.Cinv = inverse(self.C)
        except ZeroDivisionError:
            raise FrameError("elements of %s are not a K(x)-basis of A" % name) from None
        self.e, self.M = diff_matrix(self)
        self._tM = None
        self.tags = set(tags)

    @property
    def n(self):
        return self.module.n

    def coords(self, f):
        """Coordinates of f in this frame."""
        return vecmat(list(f.coords), self.Cinv)

    def element(self, c):
        return AElement(self.module, tuple(vecmat(list(c), self.C)))

    @property
    def tM(self):
        if self._tM is None:
            self._tM = t_matrix(self)
        return self._tM

    def deriv_coords(self, c):
        """Coordinates of (sum c_i w_i)'."""
        n = self.n
        out = [ci.deriv() for ci in c]
        acc = [R_ZERO] * n
        for i in range(n):
            if c[i]:
                for j in range(n):
                    if self.M[i][j]:
                        acc[j] = acc[j] + c[i] * RatX(self.M[i][j])
        einv = RatX(self.e).inv()
        return [out[j] + acc[j] * einv for j in range(n)]

    def dt_coords(self, c):
        """Coordinates of dt . (sum c_i w_i)."""
        n = self.n
        tM = self.tM
        out = [ci.deriv_t() for ci in c]
        acc = [R_ZERO] * n
        for i in range(n):
            if c[i]:
                for j in range(n):
                    if tM[i][j]:
                        acc[j] = acc[j] + c[i] * RatX(tM[i][j])
        einv = RatX(self.e).inv()
        return [out[j] + acc[j] * einv for j in range(n)]

    def is_local_at_infinity(self):
        de = self.e.degree()
        return all(m.degree() < de for r in self.M for m in r)

    def e_squarefree(self):
        return squarefree_part(self.e).degree() == self.e.degree()


def diff_matrix(W):
    """(e, M) with e w_i' = sum_j m_ij w_j; e monic, gcd(e, m_ij) = 1."""
    if isinstance(W, BasisFrame):
        frame = W
    else:
        raise TypeError("diff_matrix expects a BasisFrame")
    D = [vecmat(list(w.deriv().coords), frame.Cinv) for w in frame.elements]
    return _clear(D)


def t_matrix(W):
    """tM with e dt.w_i = sum_j tm_ij w_j, using the frame's own e."""
    module = W.module
    if module.u is None:
        raise FrameError("no t-action attached to the module")
    D = [vecmat(list(w.dt().coords), W.Cinv) for w in W.elements]
    Er = RatX(W.e)
    out = []
    for r in D:
        row = []
        for v in r:
            p = v * Er
            if not p.is_poly():
                raise FrameError("t-matrix denominator does not divide e; "
                                 "the basis or the t-action is inconsistent")
            row.append(p.to_polyx())
        out.append(row)
    return out


# -- normalization at infinity ---------------------------------------------------

def singularity_count(frame):
    """N' = number of distinct roots of e * lc(L) (denominator-cleared)."""
    Lc = clear_op(frame.module.L)
    lc = Lc.coeffs[-1].to_polyx()
    return squarefree_part(frame.e * lc).degree()


def tau_bound(frame):
    n = frame.n
    return n * (n - 1) * (singularity_count(frame) - 1) // 2


def _taus(m):
    taus = []
    for row in m:
        vals = [v.valuation_inf() for v in row if v]
        if not vals:
            raise FrameError("zero row in change of basis")
        taus.append(min(vals))
    return taus


def normalize_at_infinity(W, Nu, max_iter=None):
    """Make W normal at infinity using the local integral basis Nu.

    Returns (Wn, tau, info) with info = {"sums": [...], "iterations": k,
    "bound": b}.
    """
    module = W.module
    n = W.n
    elems = list(W.elements)
    m = [vecmat(list(w.coords), Nu.Cinv) for w in elems]
    bound = tau_bound(W)
    sums = []
    it = 0
    while True:
        taus = _taus(m)
        s = sum(taus)
        if sums and s <= sums[-1]:
            raise FrameError("tau-sum did not increase; inputs are not integral bases")
        sums.append(s)
        if s > bound:
            raise FrameError("tau-sum %d exceeds the bound %d; L is not fuchsian "
                             "or the bases are not integral" % (s, bound))
        B = [[v.shift(taus[i]).value_at_infinity() for v in m[i]] for i in range(n)]
        if rank(B) == n:
            break
        if max_iter is not None and it >= max_iter:
            raise FrameError("normalization did not terminate in %d steps" % max_iter)
        a = left_nullspace(B)[0]
        ell = min((taus[i], i) for i in range(n) if a[i])[1]
        coeffs = [RatX(a[i]).shift(taus[i] - taus[ell]) if a[i] else R_ZERO
                  for i in range(n)]
        new = module.zero()
        row = [R_ZERO] * n
        for i in range(n):
            if a[i]:
                new = new + elems[i].scale(coeffs[i])
                row = [x + coeffs[i] * y for x, y in zip(row, m[i])]
        elems[ell] = new
        m[ell] = row
        it += 1
    Wn = W if it == 0 else BasisFrame(module, elems, name=W.name, tags=W.tags)
    Wn.tags.add("normal-at-infinity")
    return Wn, taus, {"sums": sums, "iterations": it, "bound": bound}


# -- local frame V = diag(x^tau) W ---------------------------------------------

class LocalFrame:
    """V = diag(x^tau) W with x^lam e V' = B V."""

    def __init__(self, W, tau, lam, B):
        self.W = W
        self.tau = list(tau)
        self.lam = lam
        self.e = W.e
        self.B = B
        self.delta = lam + W.e.degree() - 1
        self.a = W.e.shift(lam)
        self.tags = {"normal-at-zero", "local-at-infinity"}

    @property
    def n(self):
        return self.W.n

    def deg_B(self):
        return max((b.degree() for r in self.B for b in r), default=-1)

    def from_w(self, c):
        """W-coordinates -> V-coordinates (c_i x^-tau_i)."""
        return [ci.shift(-t) if ci else ci for ci, t in zip(c, self.tau)]

    def to_w(self, c):
        return [ci.shift(t) if ci else ci for ci, t in zip(c, self.tau)]

    def element(self, c):
        return self.W.element(self.to_w(c))

    def elements(self):
        n = self.n
        out = []
        for i in range(n):
            c = [RatX.x() ** self.tau[i] if j == i else R_ZERO for j in range(n)]
            out.append(self.W.element(c))
        return out


def build_local_frame(Wn, tau):
    n = Wn.n
    e = Wn.e
    E = RatX(e)
    rows = []
    lam = 0
    for i in range(n):
        row = []
        for j in range(n):
            v = RatX(Wn.M[i][j]).shift(tau[i] - tau[j])
            if i == j and tau[i]:
                v = v + E * RatX(tau[i]) * RatX.x() ** -1
            # v = e * V'_ij; its denominator must be a power of x
            if v:
                den = v.denom
                k = den.degree()
                if den != PolyX.monomial(k):
                    raise FrameError("local frame has a denominator other than x")
                lam = max(lam, k)
            row.append(v)
        rows.append(row)
    B = [[v.shift(lam).to_polyx() if v else PolyX() for v in r] for r in rows]
    V = LocalFrame(Wn, tau, lam, B)
    # gcd(x^lam e, B) = 1 is automatic for minimal lam unless x | e and x | B
    if V.deg_B() > V.delta:
        raise FrameError("deg B = %d exceeds lam + deg e - 1 = %d"
                         % (V.deg_B(), V.delta))
    return V


class VSpace:
    """Everywhere-integral elements x^j w_i (0 <= j <= tau_i) and their derivatives."""

    def __init__(self, Wn, tau):
        self.W = Wn
        self.tau = list(tau)
        n = Wn.n
        self.index = [(i, j) for i in range(n) for j in range(0, tau[i] + 1)]
        self.basis = []
        self.derivative_basis = []
        for i, j in self.index:
            c = [RatX.x() ** j if k == i else R_ZERO for k in range(n)]
            self.basis.append(c)
            self.derivative_basis.append(Wn.deriv_coords(c))

    def __len__(self):
        return len(self.index)

    def elements(self):
        return [self.W.element(c) for c in self.basis]


def v_space(Wn, tau):
    return VSpace(Wn, tau)


def check_gcd_condition(frame):
    g = frame.e
    for r in frame.M:
        for m in r:
            g = poly_gcd(g, m)
    return g.degree() == 0
