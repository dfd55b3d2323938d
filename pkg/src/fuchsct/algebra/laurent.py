"""Vectors of Laurent polynomials in x over K, the spaces K[x]_{eta,mu}^n."""

from .paramrat import ZERO as K_ZERO
from .polyx import PolyX
from .ratx import RatX


class LaurentVec:
    """n components, each a finite sum of c x^k with k any integer.

    Stored sparsely as ``{(i, k): c}`` with nonzero c; ``lower`` is the least
    occupied exponent (0 for the zero vector) and ``components`` the dense
    coefficient lists starting at ``lower``.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_ratx(cls, vec):
        """Each entry must be a Laurent polynomial (denominator a power of x)."""
        terms = {}
        for i, r in enumerate(vec):
            if not r:
                continue
            den = r.denom
            m = den.degree()
            if den != PolyX.monomial(m):
                raise ValueError("entry %d is not a Laurent polynomial" % i)
            num = r.numer
            for k, c in enumerate(num.coeffs()):
                if c:
                    terms[(i, k - m)] = c
        return cls(len(vec), terms)

    @classmethod
    def from_polyx(cls, vec, shift=0):
        terms = {}
        for i, p in enumerate(vec):
            for k, c in enumerate(p.coeffs()):
                if c:
                    terms[(i, k + shift)] = c
        return cls(len(vec), terms)

    @property
    def lower(self):
        return min((k for _, k in self.terms), default=0)

    @property
    def upper(self):
        return max((k for _, k in self.terms), default=0)

    @property
    def components(self):
        lo, hi = self.lower, self.upper
        out = [[K_ZERO] * (hi - lo + 1) for _ in range(self.n)]
        for (i, k), c in self.terms.items():
            out[i][k - lo] = c
        return out

    def coeff(self, i, k):
        return self.terms.get((i, k), K_ZERO)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentVec) and self.n == other.n and \
            self.terms == other.terms

    def __add__(self, other):
        t = dict(self.terms)
        for key, c in other.terms.items():
            v = t.get(key)
            t[key] = c if v is None else v + c
        return LaurentVec(self.n, t)

    def __neg__(self):
        return LaurentVec(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return LaurentVec(self.n)
        return LaurentVec(self.n, {k: v * c for k, v in self.terms.items()})

    def shift(self, s):
        """Multiply by x^s."""
        return LaurentVec(self.n, {(i, k + s): c for (i, k), c in self.terms.items()})

    def deriv(self):
        return LaurentVec(self.n, {(i, k - 1): c * k for (i, k), c in self.terms.items() if k})

    def to_ratx(self):
        lo = min(self.lower, 0)
        out = []
        for i in range(self.n):
            cs = [self.coeff(i, k) for k in range(lo, self.upper + 1)]
            out.append(RatX(PolyX(cs)).shift(lo))
        return out

    def __repr__(self):
        parts = ["%s*x^%d e%d" % (c, k, i) for (i, k), c in sorted(self.terms.items())]
        return "LaurentVec(%s)" % (" + ".join(parts) or "0")
