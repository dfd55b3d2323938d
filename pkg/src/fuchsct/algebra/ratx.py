"""Rational functions in x over K = Q(t).

A value is a reduced fraction ``N / D`` of polynomials in Z[t][x]; ``D`` has a
positive leading coefficient.  Units of Z[t, x] are +-1, so the pair is
canonical.  ``numer`` and ``denom`` give the K[x] view with monic denominator.
"""

from . import kernels as K
from .paramrat import ZERO as K_ZERO
from .paramrat import ParamRat
from .polyx import PolyX

_ONE = (1,)
_BONE = ((1,),)


def _pos(N, D):
    if D[-1][-1] < 0:
        return K.b_neg(N), K.b_neg(D)
    return N, D


def _norm(N, D):
    if not N:
        return (), _BONE
    if D == _BONE:
        return N, D
    g = K.b_gcd(N, D)
    if g != _BONE:
        N = K.b_divexact(N, g)
        D = K.b_divexact(D, g)
    return _pos(N, D)


class RatX:
    __slots__ = ("N", "D", "_hash")

    def __init__(self, value=0):
        if isinstance(value, RatX):
            self.N, self.D = value.N, value.D
        elif isinstance(value, PolyX):
            self.N, self.D = value.P, (value.d,)
        else:
            c = value if isinstance(value, ParamRat) else ParamRat(value)
            self.N = (c.num,) if c.num else ()
            self.D = (c.den,)
        self._hash = None

    @classmethod
    def _raw(cls, N, D=_BONE):
        obj = cls.__new__(cls)
        obj.N, obj.D, obj._hash = N, D, None
        return obj

    @classmethod
    def make(cls, N, D=_BONE):
        if not D:
            raise ZeroDivisionError("zero denominator in K(x)")
        return cls._raw(*_norm(N, D))

    @classmethod
    def frac(cls, p, q):
        """p / q for PolyX p, q."""
        if not q.P:
            raise ZeroDivisionError("zero denominator in K(x)")
        N = K.b_scale(p.P, q.d)
        D = K.b_scale(q.P, p.d)
        return cls.make(N, D)

    @classmethod
    def x(cls):
        return cls._raw(((), _ONE))

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.N)

    def is_zero(self):
        return not self.N

    def is_one(self):
        return self.N == _BONE and self.D == _BONE

    def is_poly(self):
        """True when the element lies in K[x]."""
        return len(self.D) == 1

    def is_const(self):
        return len(self.D) == 1 and len(self.N) <= 1

    def __eq__(self, other):
        if not isinstance(other, RatX):
            o = self._coerce(other)
            if o is NotImplemented:
                return o
            other = o
        return self.N == other.N and self.D == other.D

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.N, self.D))
        return self._hash

    # -- views ------------------------------------------------------------
    @property
    def numer(self):
        if not self.N:
            return PolyX._raw(())
        return PolyX.make(self.N, self.D[-1])

    @property
    def denom(self):
        return PolyX.make(self.D, self.D[-1])

    def to_polyx(self):
        if len(self.D) != 1:
            raise ValueError("not a polynomial in x")
        return PolyX.make(self.N, self.D[0])

    def to_paramrat(self):
        if len(self.D) != 1 or len(self.N) > 1:
            raise ValueError("not constant in x")
        return ParamRat.make(self.N[0], self.D[0]) if self.N else K_ZERO

    def deg_num(self):
        return len(self.N) - 1 if self.N else -1

    def deg_den(self):
        return len(self.D) - 1

    def valuation_inf(self):
        """deg D - deg N, i.e. the order at x = infinity; None for zero."""
        if not self.N:
            return None
        return len(self.D) - len(self.N)

    def value_at_infinity(self):
        """Limit as x -> infinity; requires deg N <= deg D."""
        if not self.N or len(self.N) < len(self.D):
            return K_ZERO
        if len(self.N) > len(self.D):
            raise ValueError("pole at infinity")
        return ParamRat.make(self.N[-1], self.D[-1])

    def leading_ratio(self):
        """lc(N) / lc(D) in K."""
        if not self.N:
            return K_ZERO
        return ParamRat.make(self.N[-1], self.D[-1])

    def order_at_zero(self):
        """Order of vanishing at x = 0; None for zero."""
        if not self.N:
            return None
        a = next(k for k, c in enumerate(self.N) if c)
        b = next(k for k, c in enumerate(self.D) if c)
        return a - b

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(v):
        if isinstance(v, RatX):
            return v
        if isinstance(v, (PolyX, ParamRat, int)):
            return RatX(v)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.N:
            return self
        if not self.N:
            return o
        if self.D == o.D:
            if self.D == _BONE:
                return RatX._raw(K.b_add(self.N, o.N))
            return RatX.make(K.b_add(self.N, o.N), self.D)
        if self.D == _BONE:
            return RatX._raw(K.b_add(K.b_mul(self.N, o.D), o.N), o.D)
        if o.D == _BONE:
            return RatX._raw(K.b_add(self.N, K.b_mul(o.N, self.D)), self.D)
        g = K.b_gcd(self.D, o.D)
        if g == _BONE:
            N = K.b_add(K.b_mul(self.N, o.D), K.b_mul(o.N, self.D))
            if not N:
                return ZERO
            return RatX._raw(*_pos(N, K.b_mul(self.D, o.D)))
        a1, a2 = K.b_divexact(self.D, g), K.b_divexact(o.D, g)
        N = K.b_add(K.b_mul(self.N, a2), K.b_mul(o.N, a1))
        if not N:
            return ZERO
        h = K.b_gcd(N, g)
        if h != _BONE:
            N = K.b_divexact(N, h)
            g = K.b_divexact(g, h)
        return RatX._raw(*_pos(N, K.b_mul(K.b_mul(a1, a2), g)))

    __radd__ = __add__

    def __neg__(self):
        return RatX._raw(K.b_neg(self.N), self.D)

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
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.N or not o.N:
            return ZERO
        n1, d1, n2, d2 = self.N, self.D, o.N, o.D
        if d2 != _BONE:
            g = K.b_gcd(n1, d2)
            if g != _BONE:
                n1, d2 = K.b_divexact(n1, g), K.b_divexact(d2, g)
        if d1 != _BONE:
            g = K.b_gcd(n2, d1)
            if g != _BONE:
                n2, d1 = K.b_divexact(n2, g), K.b_divexact(d1, g)
        return RatX._raw(*_pos(K.b_mul(n1, n2), K.b_mul(d1, d2)))

    __rmul__ = __mul__

    def inv(self):
        if not self.N:
            raise ZeroDivisionError("inverse of zero in K(x)")
        return RatX._raw(*_pos(self.D, self.N))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        r, b = ONE, self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def deriv(self):
        """Derivative with respect to x."""
        if not self.N:
            return ZERO
        if self.D == _BONE or len(self.D) == 1:
            if len(self.N) <= 1:
                return ZERO
            return RatX.make(K.b_deriv_x(self.N), self.D)
        N = K.b_sub(K.b_mul(K.b_deriv_x(self.N), self.D),
                    K.b_mul(self.N, K.b_deriv_x(self.D)))
        return RatX.make(N, K.b_mul(self.D, self.D))

    def deriv_t(self):
        if not self.N:
            return ZERO
        N = K.b_sub(K.b_mul(K.b_deriv_t(self.N), self.D),
                    K.b_mul(self.N, K.b_deriv_t(self.D)))
        if not N:
            return ZERO
        return RatX.make(N, K.b_mul(self.D, self.D))

    def scale(self, c):
        """Multiply by c in K."""
        if not c.num or not self.N:
            return ZERO
        return RatX.make(K.b_scale(self.N, c.num), K.b_scale(self.D, c.den))

    def shift(self, k):
        """Multiply by x^k for any integer k."""
        if not self.N or not k:
            return self
        if k > 0:
            return RatX.make(((),) * k + self.N, self.D)
        return RatX.make(self.N, ((),) * (-k) + self.D)

    def subs_mobius(self, a):
        """Substitute x -> a + 1/x for a in K."""
        return _mobius_poly(self.N, a) / _mobius_poly(self.D, a)

    def __str__(self):
        from .parse import format_ratx
        return format_ratx(self)

    def __repr__(self):
        return "RatX(%s)" % self


def _mobius_poly(P, a):
    # P(a + 1/x) = sum_k c_k (a x + 1)^k x^(n-k) / x^n
    if not P:
        return ZERO
    n = len(P) - 1
    ax1 = RatX(a) * RatX.x() + ONE
    acc, pw = ZERO, ONE
    for k in range(n + 1):
        if P[k]:
            acc = acc + RatX.make((P[k],)) * pw * RatX.x() ** (n - k)
        pw = pw * ax1
    return acc.shift(-n)


ZERO = RatX._raw((), _BONE)
ONE = RatX._raw(_BONE, _BONE)
