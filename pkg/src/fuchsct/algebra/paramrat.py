"""Elements of K = Q(t).

A value is stored as a pair of integer coefficient tuples ``(num, den)``
(ascending powers of t) with gcd(num, den) = 1 in Z[t] and a positive leading
coefficient on ``den``.  Z[t] has units +-1 only, so this form is canonical and
equality is structural.  The monic-denominator view over Q is available from
``monic_parts``.
"""

from fractions import Fraction

from . import kernels as K

_ONE = (1,)


def _norm(n, d):
    if not n:
        return (), _ONE
    if d == _ONE:
        return n, d
    g = K.u_gcd(n, d)
    if g != _ONE:
        n = K.u_divexact(n, g)
        d = K.u_divexact(d, g)
    if d[-1] < 0:
        n, d = K.u_neg(n), K.u_neg(d)
    return n, d


class ParamRat:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        if isinstance(num, ParamRat):
            n, d = num.num, num.den
        elif isinstance(num, tuple):
            n, d = num, den if den is not None else _ONE
            n, d = _norm(n, d)
        else:
            q = Fraction(num)
            if den is not None:
                q /= Fraction(den)
            n = (q.numerator,) if q else ()
            d = (q.denominator,)
        self.num, self.den = n, d
        self._hash = None

    @classmethod
    def _raw(cls, n, d):
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = n, d, None
        return obj

    @classmethod
    def make(cls, n, d=_ONE):
        if not d:
            raise ZeroDivisionError("zero denominator in Q(t)")
        return cls._raw(*_norm(n, d))

    @classmethod
    def t(cls):
        return cls._raw((0, 1), _ONE)

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == _ONE and self.den == _ONE

    def is_const(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def is_poly(self):
        return len(self.den) == 1

    def __eq__(self, other):
        if not isinstance(other, ParamRat):
            try:
                other = ParamRat(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(v):
        if isinstance(v, ParamRat):
            return v
        if isinstance(v, (int, Fraction)):
            return ParamRat(v)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return ParamRat.make(K.u_add(self.num, o.num), self.den)
        n = K.u_add(K.u_mul(self.num, o.den), K.u_mul(o.num, self.den))
        return ParamRat.make(n, K.u_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return ParamRat._raw(K.u_neg(self.num), self.den)

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
        if not self.num or not o.num:
            return ZERO
        g1 = K.u_gcd(self.num, o.den)
        g2 = K.u_gcd(o.num, self.den)
        n1, d2 = (self.num, o.den) if g1 == _ONE else (
            K.u_divexact(self.num, g1), K.u_divexact(o.den, g1))
        n2, d1 = (o.num, self.den) if g2 == _ONE else (
            K.u_divexact(o.num, g2), K.u_divexact(self.den, g2))
        n, d = K.u_mul(n1, n2), K.u_mul(d1, d2)
        if d[-1] < 0:
            n, d = K.u_neg(n), K.u_neg(d)
        return ParamRat._raw(n, d)

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(t)")
        n, d = self.den, self.num
        if d[-1] < 0:
            n, d = K.u_neg(n), K.u_neg(d)
        return ParamRat._raw(n, d)

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
        """Derivative with respect to t."""
        if len(self.num) <= 1 and len(self.den) == 1:
            return ZERO
        n = K.u_sub(K.u_mul(K.u_deriv(self.num), self.den),
                    K.u_mul(self.num, K.u_deriv(self.den)))
        return ParamRat.make(n, K.u_mul(self.den, self.den))

    # -- views ------------------------------------------------------------
    def degree(self):
        """deg num - deg den (minus the order at t = infinity)."""
        if not self.num:
            return None
        return len(self.num) - len(self.den)

    def __call__(self, t0):
        t0 = Fraction(t0)
        d = _ueval_q(self.den, t0)
        if d == 0:
            raise ZeroDivisionError("pole at t = %s" % t0)
        return _ueval_q(self.num, t0) / d

    def monic_parts(self):
        """(numerator, denominator) as Fraction lists with monic denominator."""
        lc = self.den[-1]
        return ([Fraction(c, lc) for c in self.num],
                [Fraction(c, lc) for c in self.den])

    def sign(self):
        """Sign of the leading numeric coefficient of the numerator."""
        if not self.num:
            return 0
        return 1 if self.num[-1] > 0 else -1

    def __str__(self):
        from .parse import format_paramrat
        return format_paramrat(self)

    def __repr__(self):
        return "ParamRat(%s)" % self


def _ueval_q(a, v):
    if v.denominator == 1:
        return Fraction(K.u_eval(a, v.numerator))
    r = Fraction(0)
    for c in reversed(a):
        r = r * v + c
    return r


ZERO = ParamRat._raw((), _ONE)
ONE = ParamRat._raw(_ONE, _ONE)
