"""Polynomials in x over K = Q(t).

Stored as ``P / d`` with ``P`` in Z[t][x] (tuple of Z[t] tuples, ascending in x)
and ``d`` in Z[t] with positive leading coefficient and no common factor with
the content of ``P``.  That pair is unique for each element.
"""

from . import kernels as K
from .paramrat import ONE as K_ONE
from .paramrat import ZERO as K_ZERO
from .paramrat import ParamRat

_ONE = (1,)


def _norm(P, d):
    if not P:
        return (), _ONE
    if d != _ONE:
        g = K.u_gcd(K.b_content(P), d)
        if g != _ONE:
            P = K.b_divexact_u(P, g)
            d = K.u_divexact(d, g)
        if d[-1] < 0:
            P, d = K.b_neg(P), K.u_neg(d)
    return P, d


class PolyX:
    __slots__ = ("P", "d", "_hash")

    def __init__(self, coeffs=()):
        """Build from a list of coefficients (ParamRat, int or Fraction), ascending in x."""
        if isinstance(coeffs, PolyX):
            self.P, self.d, self._hash = coeffs.P, coeffs.d, None
            return
        cs = [c if isinstance(c, ParamRat) else ParamRat(c) for c in coeffs]
        den = _ONE
        for c in cs:
            if c.den != den and c.num:
                den = K.u_mul(den, K.u_divexact(c.den, K.u_gcd(den, c.den)))
        P = []
        for c in cs:
            P.append(K.u_mul(c.num, K.u_divexact(den, c.den)) if c.num else ())
        while P and not P[-1]:
            P.pop()
        self.P, self.d = _norm(tuple(P), den)
        self._hash = None

    @classmethod
    def _raw(cls, P, d=_ONE):
        obj = cls.__new__(cls)
        obj.P, obj.d, obj._hash = P, d, None
        return obj

    @classmethod
    def make(cls, P, d=_ONE):
        if not d:
            raise ZeroDivisionError("zero denominator")
        return cls._raw(*_norm(P, d))

    @classmethod
    def x(cls):
        return cls._raw(((), _ONE))

    @classmethod
    def monomial(cls, k, c=K_ONE):
        if not c:
            return ZERO
        return cls._raw(((),) * k + (c.num,), c.den)

    @classmethod
    def const(cls, c):
        c = c if isinstance(c, ParamRat) else ParamRat(c)
        return cls._raw((c.num,) if c.num else (), c.den)

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.P)

    def is_zero(self):
        return not self.P

    def is_one(self):
        return self.P == ((1,),) and self.d == _ONE

    def is_const(self):
        return len(self.P) <= 1

    def __eq__(self, other):
        if not isinstance(other, PolyX):
            if isinstance(other, (int, ParamRat)):
                other = PolyX.const(other)
            else:
                return NotImplemented
        return self.P == other.P and self.d == other.d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.P, self.d))
        return self._hash

    # -- structure --------------------------------------------------------
    def degree(self):
        return len(self.P) - 1 if self.P else -1

    def coeff(self, k):
        if k < 0 or k >= len(self.P) or not self.P[k]:
            return K_ZERO
        return ParamRat.make(self.P[k], self.d)

    def coeffs(self):
        return [self.coeff(k) for k in range(len(self.P))]

    def lc(self):
        return self.coeff(len(self.P) - 1) if self.P else K_ZERO

    def tc_order(self):
        """Multiplicity of x as a factor (order at 0); None for zero."""
        for k, c in enumerate(self.P):
            if c:
                return k
        return None

    def monic(self):
        if not self.P:
            return self
        return PolyX.make(self.P, self.P[-1])

    def primitive(self):
        """Integer-coefficient primitive associate with positive leading coefficient."""
        if not self.P:
            return ()
        c = K.b_content(self.P)
        return K.b_divexact_u(self.P, c) if c != _ONE else self.P

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(v):
        if isinstance(v, PolyX):
            return v
        if isinstance(v, ParamRat):
            return PolyX.const(v)
        if isinstance(v, int):
            return PolyX.const(ParamRat(v))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.P:
            return self
        if not self.P:
            return o
        if self.d == o.d:
            return PolyX.make(K.b_add(self.P, o.P), self.d)
        g = K.u_gcd(self.d, o.d)
        a1, a2 = K.u_divexact(self.d, g), K.u_divexact(o.d, g)
        P = K.b_add(K.b_scale(self.P, a2), K.b_scale(o.P, a1))
        return PolyX.make(P, K.u_mul(self.d, a2))

    __radd__ = __add__

    def __neg__(self):
        return PolyX._raw(K.b_neg(self.P), self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, ParamRat):
            return self.scale(other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.P or not o.P:
            return ZERO
        P = K.b_mul(self.P, o.P)
        if self.d == _ONE and o.d == _ONE:
            return PolyX._raw(P)
        return PolyX.make(P, K.u_mul(self.d, o.d))

    __rmul__ = __mul__

    def scale(self, c):
        if not c.num or not self.P:
            return ZERO
        if c.den == _ONE and self.d == _ONE:
            return PolyX._raw(K.b_scale(self.P, c.num))
        return PolyX.make(K.b_scale(self.P, c.num), K.u_mul(self.d, c.den))

    def __pow__(self, k):
        r, b = ONE, self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def shift(self, k):
        """Multiply by x^k (k >= 0)."""
        if not self.P or not k:
            return self
        return PolyX._raw(((),) * k + self.P, self.d)

    def divmod(self, other):
        if not other.P:
            raise ZeroDivisionError("polynomial division by zero")
        if len(self.P) < len(other.P):
            return ZERO, self
        q, r = K.b_pdivrem(self.P, other.P)
        lc = other.P[-1]
        s = _ONE
        for _ in range(len(self.P) - len(other.P) + 1):
            s = K.u_mul(s, lc)
        sd = K.u_mul(s, self.d)
        return (PolyX.make(K.b_scale(q, other.d), sd) if q else ZERO,
                PolyX.make(r, sd) if r else ZERO)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divexact(self, other):
        """Exact quotient; None when ``other`` does not divide."""
        if not other.P:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.P:
            return ZERO
        oP = other.primitive()
        q = K.b_divexact(self.P, oP)
        if q is None:
            return None
        # other = c * oP
        c = ParamRat.make(other.P[-1], other.d) / ParamRat.make(oP[-1])
        return PolyX.make(q, self.d).scale(c.inv())

    def divides(self, other):
        return other.divexact(self) is not None

    def deriv(self):
        """Derivative with respect to x."""
        if len(self.P) <= 1:
            return ZERO
        return PolyX.make(K.b_deriv_x(self.P), self.d)

    def deriv_t(self):
        if not self.P:
            return ZERO
        if self.d == _ONE:
            return PolyX._raw(K.b_deriv_t(self.P))
        P = K.b_sub(K.b_scale(K.b_deriv_t(self.P), self.d),
                    K.b_scale(self.P, K.u_deriv(self.d)))
        return PolyX.make(P, K.u_mul(self.d, self.d))

    def __call__(self, x0):
        """Evaluate at x = x0 for x0 in K."""
        x0 = x0 if isinstance(x0, ParamRat) else ParamRat(x0)
        r = K_ZERO
        for k in range(len(self.P) - 1, -1, -1):
            r = r * x0 + self.coeff(k)
        return r

    def gcd(self, other):
        return poly_gcd(self, other)

    def __str__(self):
        from .parse import format_polyx
        return format_polyx(self)

    def __repr__(self):
        return "PolyX(%s)" % self


def poly_gcd(p, q):
    """Monic gcd in K[x]; gcd(0, 0) = 0."""
    if not p.P and not q.P:
        return ZERO
    if not p.P:
        return q.monic()
    if not q.P:
        return p.monic()
    h = K.b_gcd(p.P, q.P)
    return PolyX.make(h, h[-1])


def poly_lcm(p, q):
    if not p.P or not q.P:
        return ZERO
    g = poly_gcd(p, q)
    return (p.divexact(g) * q).monic()


ZERO = PolyX._raw((), _ONE)
ONE = PolyX._raw(((1,),), _ONE)
X = PolyX._raw(((), (1,)), _ONE)
