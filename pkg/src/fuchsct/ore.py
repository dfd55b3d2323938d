"""Differential operators in K(x)[d/dx] and the module A = K(x)[d/dx]/<L>.

Elements of A are kept as coordinate vectors over the power basis
1, D, ..., D^(n-1) where n = ord L.  The t-action is fixed by U with
dt . 1 = U mod L; on a general element it acts coefficient-wise in t plus the
contribution P_f . U.
"""

from fractions import Fraction

from .algebra import kernels as K
from .algebra.paramrat import ParamRat
from .algebra.ratx import ONE as R_ONE
from .algebra.ratx import ZERO as R_ZERO
from .algebra.ratx import RatX


class InconsistentAction(ValueError):
    pass


def _ratx(v):
    return v if isinstance(v, RatX) else RatX(v)


class OreOp:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_ratx(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, OreOp) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else R_ZERO

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return OreOp([self[i] + other[i] for i in range(n)])

    def __neg__(self):
        return OreOp([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, OreOp):
            return op_mul(self, other)
        return NotImplemented

    def lmul(self, r):
        """Left multiplication by r in K(x)."""
        r = _ratx(r)
        return OreOp([r * c for c in self.coeffs])

    def dt_coeffs(self):
        return OreOp([c.deriv_t() for c in self.coeffs])

    def _dx_left(self):
        # D * self = sum c_i' D^i + c_i D^(i+1)
        cs = [c.deriv() for c in self.coeffs] + [R_ZERO]
        for i, c in enumerate(self.coeffs):
            cs[i + 1] = cs[i + 1] + c
        return OreOp(cs)

    def apply(self, y):
        """Apply to a function y in K(x)."""
        y = _ratx(y)
        acc, d = R_ZERO, y
        for c in self.coeffs:
            acc = acc + c * d
            d = d.deriv()
        return acc

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    __repr__ = __str__


def op_mul(a, b):
    """Product in K(x)[D] with D c = c D + c'."""
    acc = OreOp([])
    Db = b
    for i, c in enumerate(a.coeffs):
        if i:
            Db = Db._dx_left()
        if c:
            acc = acc + Db.lmul(c)
    return acc


class AModule:
    """The quotient A for a fixed L, optionally with a t-action."""

    def __init__(self, L, U=None, check=True):
        if isinstance(L, (list, tuple)):
            L = OreOp(L)
        if L.order < 1:
            raise ValueError("L must have order at least 1")
        self.L = L
        self.n = n = L.order
        lc = L.coeffs[-1]
        self.rel = tuple(-(c / lc) for c in L.coeffs[:-1])  # D^n = sum rel_i D^i
        self._powers = [self._unit(i) for i in range(n)]
        self.U = None
        self.u = None
        self._Du = None
        if U is not None:
            self.set_action(U, check=check)

    def _unit(self, i):
        return AElement(self, tuple(R_ONE if j == i else R_ZERO for j in range(self.n)))

    def one(self):
        return self._unit(0)

    def zero(self):
        return AElement(self, (R_ZERO,) * self.n)

    def element(self, coords):
        coords = tuple(_ratx(c) for c in coords)
        if len(coords) != self.n:
            raise ValueError("expected %d coordinates" % self.n)
        return AElement(self, coords)

    def power(self, k):
        """D^k reduced mod L."""
        while len(self._powers) <= k:
            self._powers.append(self.x_derivative(self._powers[-1]))
        return self._powers[k]

    def reduce(self, p):
        """Right remainder of p modulo L as an element of A."""
        if isinstance(p, (list, tuple)):
            p = OreOp(p)
        n = self.n
        out = list(p.coeffs[:n]) + [R_ZERO] * max(0, n - len(p.coeffs))
        for k in range(n, len(p.coeffs)):
            c = p.coeffs[k]
            if c:
                pw = self.power(k).coords
                for j in range(n):
                    if pw[j]:
                        out[j] = out[j] + c * pw[j]
        return AElement(self, tuple(out))

    def x_derivative(self, f):
        n = self.n
        c = f.coords
        out = [ci.deriv() for ci in c]
        for i in range(n - 1):
            if c[i]:
                out[i + 1] = out[i + 1] + c[i]
        top = c[n - 1]
        if top:
            for j in range(n):
                if self.rel[j]:
                    out[j] = out[j] + top * self.rel[j]
        return AElement(self, tuple(out))

    def set_action(self, U, check=True):
        if isinstance(U, (list, tuple)):
            U = OreOp(U)
        self.U = U
        self.u = self.reduce(U)
        Du = [self.u]
        for _ in range(self.n - 1):
            Du.append(self.x_derivative(Du[-1]))
        self._Du = Du
        if check:
            self.check_action()

    def t_derivative(self, f):
        if self._Du is None:
            raise ValueError("no t-action attached")
        out = [ci.deriv_t() for ci in f.coords]
        for i, ci in enumerate(f.coords):
            if ci:
                du = self._Du[i].coords
                for j in range(self.n):
                    if du[j]:
                        out[j] = out[j] + ci * du[j]
        return AElement(self, tuple(out))

    def check_action(self):
        """dt and dx must commute on A; only D^(n-1) gives a nontrivial test."""
        for i in range(self.n):
            e = self._unit(i)
            a = self.t_derivative(self.x_derivative(e))
            b = self.x_derivative(self.t_derivative(e))
            if a != b:
                raise InconsistentAction(
                    "dt and dx do not commute on D^%d; U is not a valid t-action" % i)
        return True


class AElement:
    __slots__ = ("module", "coords")

    def __init__(self, module, coords):
        self.module = module
        self.coords = coords

    def _check(self, other):
        if other.module is not self.module:
            raise ValueError("elements of different modules")

    def __add__(self, other):
        self._check(other)
        return AElement(self.module, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return AElement(self.module, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AElement(self.module, tuple(-a for a in self.coords))

    def scale(self, r):
        """Left multiplication by r in K(x) or K."""
        r = _ratx(r)
        return AElement(self.module, tuple(r * a for a in self.coords))

    def __rmul__(self, r):
        return self.scale(r)

    def __bool__(self):
        return any(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __eq__(self, other):
        return isinstance(other, AElement) and self.module is other.module and \
            self.coords == other.coords

    def deriv(self):
        return self.module.x_derivative(self)

    def dt(self):
        return self.module.t_derivative(self)

    def to_op(self):
        return OreOp(self.coords)

    def __repr__(self):
        return "AElement(%s)" % ", ".join(str(c) for c in self.coords)


def reduce_mod_L(p, L):
    return AModule(L).reduce(p)


def x_derivative(f):
    return f.module.x_derivative(f)


def t_derivative(f):
    return f.module.t_derivative(f)


# -- substitution x -> a + 1/x ------------------------------------------------

def _dnew_powers(k):
    # d/dx_old = -x^2 d/dx_new
    base = OreOp([R_ZERO, -RatX.x() ** 2])
    out = [OreOp([R_ONE])]
    for _ in range(k):
        out.append(op_mul(base, out[-1]))
    return out


def substitute_op(P, a):
    """Rewrite P(x, D) in the coordinate X with x = a + 1/X (no clearing)."""
    a = a if isinstance(a, ParamRat) else ParamRat(Fraction(a))
    pw = _dnew_powers(P.order)
    acc = OreOp([])
    for i, c in enumerate(P.coeffs):
        if c:
            acc = acc + pw[i].lmul(c.subs_mobius(a))
    return acc


def clear_op(P):
    """Left factor making all coefficients polynomials in Z[t][x] with trivial content."""
    den = ((1,),)
    for c in P.coeffs:
        if c:
            g = K.b_gcd(den, c.D)
            den = K.b_mul(den, K.b_divexact(c.D, g))
    nums = [K.b_mul(c.N, K.b_divexact(den, c.D)) if c else () for c in P.coeffs]
    g = ()
    for v in nums:
        if v:
            g = K.b_gcd(g, v) if g else v
            if g == ((1,),):
                break
    if g and g[-1][-1] < 0:
        g = K.b_neg(g)
    top = nums[-1]
    out = [K.b_divexact(v, g) if v else () for v in nums]
    if top and K.b_divexact(top, g)[-1][-1] < 0:
        out = [K.b_neg(v) for v in out]
    return OreOp([RatX._raw(v) if v else R_ZERO for v in out])


def mobius_substitute(L, a):
    """Operator whose solutions are y(a + 1/x), with polynomial coefficients."""
    return clear_op(substitute_op(L, a))


def mobius_integrand(f, a):
    """Integrand after x -> a + 1/x, including the factor dx_old = -dX/X^2."""
    return substitute_op(f, a).lmul(-(RatX.x() ** -2))


def mobius_point(e, lcL):
    """Smallest nonnegative integer a with e(a) lc(L)(a) != 0 identically in t."""
    a = 0
    while True:
        if e(a) and lcL(a):
            return a
        a += 1
