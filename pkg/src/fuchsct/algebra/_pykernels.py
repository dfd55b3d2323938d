"""Dense integer polynomial kernels, interpreted version.

Univariate polynomials in ``Z[t]`` are tuples of Python ints, lowest degree
first, with no trailing zeros; the zero polynomial is ``()``.  Bivariate
polynomials in ``Z[t][x]`` are tuples of univariate polynomials indexed by
the power of ``x``, again without trailing zero entries.

``_ckernels.pyx`` implements the same functions with typed loops; the two
modules must agree exactly.
"""

from math import gcd as igcd
from math import isqrt

__all__ = [
    "u_add", "u_sub", "u_neg", "u_mul", "u_scale", "u_deriv", "u_content",
    "u_divexact_int", "u_divexact", "u_prem", "u_gcd", "u_eval", "u_primitive",
    "b_add", "b_sub", "b_neg", "b_mul", "b_scale", "b_scale_int", "b_deriv_x",
    "b_deriv_t", "b_content", "b_divexact_u", "b_divexact", "b_prem", "b_gcd",
    "b_eval_t",
]


def _strip(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


# -- univariate ---------------------------------------------------------------

def u_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    c = list(a)
    for i, v in enumerate(b):
        c[i] += v
    return _strip(c)


def u_neg(a):
    return tuple(-v for v in a)


def u_sub(a, b):
    if not b:
        return a
    n = max(len(a), len(b))
    c = list(a) + [0] * (n - len(a))
    for i, v in enumerate(b):
        c[i] -= v
    return _strip(c)


def u_mul(a, b):
    if not a or not b:
        return ()
    la, lb = len(a), len(b)
    if la == 1:
        s = a[0]
        return tuple(s * v for v in b)
    if lb == 1:
        s = b[0]
        return tuple(s * v for v in a)
    c = [0] * (la + lb - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] += ai * bj
    return tuple(c)


def u_scale(a, s):
    if not s:
        return ()
    if s == 1:
        return a
    return tuple(s * v for v in a)


def u_deriv(a):
    return _strip([i * a[i] for i in range(1, len(a))])


def u_content(a):
    """Nonnegative gcd of the coefficients."""
    g = 0
    for v in a:
        g = igcd(g, v)
        if g == 1:
            return 1
    return g


def u_divexact_int(a, s):
    return tuple(v // s for v in a)


def u_primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return a
    g = u_content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a
    return tuple(v // g for v in a)


def u_divexact(a, b):
    """Quotient ``a / b`` in ``Z[t]``, or ``None`` when ``b`` does not divide ``a``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    la, lb = len(a), len(b)
    if la < lb:
        return None
    if lb == 1:
        s = b[0]
        q = []
        for v in a:
            if v % s:
                return None
            q.append(v // s)
        return tuple(q)
    r = list(a)
    lc = b[-1]
    q = [0] * (la - lb + 1)
    for k in range(la - lb, -1, -1):
        v = r[k + lb - 1]
        if v:
            if v % lc:
                return None
            c = v // lc
            q[k] = c
            for j in range(lb):
                r[k + j] -= c * b[j]
    for v in r[:lb - 1]:
        if v:
            return None
    return tuple(q)


def u_prem(a, b):
    """Pseudo-remainder of ``a`` by ``b``."""
    la, lb = len(a), len(b)
    if la < lb:
        return a
    r = list(a)
    lc = b[-1]
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        r = [lc * v for v in r]
        if c:
            for j in range(lb):
                r[k + j] -= c * b[j]
        r.pop()
    return _strip(r)


def u_eval(a, v):
    r = 0
    for c in reversed(a):
        r = r * v + c
    return r


def _maxnorm(a):
    return max(abs(v) for v in a)


def _interpolate(h, xi):
    out = []
    half = xi // 2
    while h:
        g = h % xi
        if g > half:
            g -= xi
        out.append(g)
        h = (h - g) // xi
    return _strip(out)


def _u_gcd_prs(a, b):
    # primitive PRS on primitive inputs
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = u_prem(a, b)
        a, b = b, (u_primitive(r) if r else ())
        if len(b) == 1:
            return (1,)
    return u_primitive(a)


def u_gcd(a, b):
    """gcd in ``Z[t]`` with positive leading coefficient (``gcd(0, 0) = ()``)."""
    if not a:
        return b if not b or b[-1] > 0 else u_neg(b)
    if not b:
        return a if a[-1] > 0 else u_neg(a)
    ca, cb = u_content(a), u_content(b)
    c = igcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return (c,)
    if a == b:
        return u_scale(u_primitive(a), c)
    fa = tuple(v // ca for v in a)
    fb = tuple(v // cb for v in b)
    # heuristic gcd: evaluate, take the integer gcd, lift back
    na, nb = _maxnorm(fa), _maxnorm(fb)
    bound = 2 * min(na, nb) + 29
    xi = max(min(bound, 99 * isqrt(bound)),
             2 * min(na // abs(fa[-1]), nb // abs(fb[-1])) + 2)
    for _ in range(6):
        va, vb = u_eval(fa, xi), u_eval(fb, xi)
        if va and vb:
            h = _interpolate(igcd(va, vb), xi)
            if h:
                h = u_primitive(h)
                if u_divexact(fa, h) is not None and u_divexact(fb, h) is not None:
                    return u_scale(h, c)
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    fa, fb = u_primitive(fa), u_primitive(fb)
    return u_scale(_u_gcd_prs(fa, fb), c)


# -- bivariate ----------------------------------------------------------------

def b_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    c = list(a)
    for i, v in enumerate(b):
        if v:
            c[i] = u_add(c[i], v)
    return _strip(c)


def b_neg(a):
    return tuple(u_neg(v) for v in a)


def b_sub(a, b):
    if not b:
        return a
    n = max(len(a), len(b))
    c = list(a) + [()] * (n - len(a))
    for i, v in enumerate(b):
        if v:
            c[i] = u_sub(c[i], v)
    return _strip(c)


def b_mul(a, b):
    if not a or not b:
        return ()
    la, lb = len(a), len(b)
    c = [()] * (la + lb - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    c[i + j] = u_add(c[i + j], u_mul(ai, bj))
    return _strip(c)


def b_scale(a, u):
    """Multiply every coefficient by the ``Z[t]`` polynomial ``u``."""
    if not u:
        return ()
    if u == (1,):
        return a
    return tuple(u_mul(v, u) for v in a)


def b_scale_int(a, s):
    if not s:
        return ()
    if s == 1:
        return a
    return tuple(tuple(s * w for w in v) for v in a)


def b_deriv_x(a):
    return _strip([u_scale(a[i], i) for i in range(1, len(a))])


def b_deriv_t(a):
    return _strip([u_deriv(v) for v in a])


def b_content(a):
    """gcd of the ``Z[t]`` coefficients, signed so ``a / content`` has positive
    leading coefficient.  Returns ``()`` for the zero polynomial."""
    if not a:
        return ()
    coeffs = sorted((v for v in a if v), key=len)
    g = ()
    for i, v in enumerate(coeffs):
        g = u_gcd(g, v)
        if len(g) == 1:
            ic = g[0]
            for w in coeffs[i + 1:]:
                if ic == 1:
                    break
                ic = igcd(ic, u_content(w))
            g = (ic,)
            break
    if a[-1][-1] < 0:
        g = u_neg(g)
    return g


def b_divexact_u(a, u):
    out = []
    for v in a:
        q = u_divexact(v, u) if v else ()
        if q is None:
            return None
        out.append(q)
    return tuple(out)


def b_divexact(a, b):
    """Quotient ``a / b`` in ``Z[t][x]``, or ``None`` when it is not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    la, lb = len(a), len(b)
    if la < lb:
        return None
    if lb == 1:
        return b_divexact_u(a, b[0])
    r = list(a)
    lc = b[-1]
    q = [()] * (la - lb + 1)
    for k in range(la - lb, -1, -1):
        v = r[k + lb - 1]
        if v:
            c = u_divexact(v, lc)
            if c is None:
                return None
            q[k] = c
            for j in range(lb):
                if b[j]:
                    r[k + j] = u_sub(r[k + j], u_mul(c, b[j]))
    for v in r[:lb - 1]:
        if v:
            return None
    return tuple(q)


def b_prem(a, b):
    """Pseudo-remainder in ``x`` with ``Z[t]`` coefficients."""
    la, lb = len(a), len(b)
    if la < lb:
        return a
    r = list(a)
    lc = b[-1]
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        r = [u_mul(lc, v) for v in r]
        if c:
            for j in range(lb):
                if b[j]:
                    r[k + j] = u_sub(r[k + j], u_mul(c, b[j]))
        r.pop()
    return _strip(r)


def b_pdivrem(a, b):
    """Pseudo-division in ``x``: ``lc(b)^k a = q b + r`` with ``k = len(a) - len(b) + 1``."""
    la, lb = len(a), len(b)
    if la < lb:
        return (), a
    r = list(a)
    lc = b[-1]
    q = [()] * (la - lb + 1)
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        q = [u_mul(lc, v) for v in q]
        for i in range(k + lb - 1):
            r[i] = u_mul(lc, r[i])
        if c:
            q[k] = c
            for j in range(lb - 1):
                if b[j]:
                    r[k + j] = u_sub(r[k + j], u_mul(c, b[j]))
        r.pop()
    return _strip(q), _strip(r)


def _b_primitive(a):
    c = b_content(a)
    if c == (1,):
        return a
    return b_divexact_u(a, c)


def _b_gcd_subres(a, b):
    # subresultant PRS over Z[t] on primitive inputs, deg_x(a) >= deg_x(b) >= 1
    g = (1,)
    h = (1,)
    while True:
        delta = len(a) - len(b)
        r = b_prem(a, b)
        if not r:
            return _b_primitive(b)
        if len(r) == 1:
            return ((1,),)
        den = u_mul(g, _u_pow(h, delta))
        a, b = b, b_divexact_u(r, den)
        g = a[-1]
        if delta:
            h = u_divexact(_u_pow(g, delta), _u_pow(h, delta - 1))


def _u_pow(a, k):
    r = (1,)
    for _ in range(k):
        r = u_mul(r, a)
    return r


def b_gcd(a, b):
    """gcd in ``Z[t][x]``, positive leading coefficient."""
    if not a:
        return _b_primitive(b) if b else ()
    if not b:
        return _b_primitive(a)
    ca, cb = b_content(a), b_content(b)
    c = u_gcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return (c,)
    pa = b_divexact_u(a, ca)
    pb = b_divexact_u(b, cb)
    if pa == pb:
        return b_scale(pa, c)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    if b_divexact(pa, pb) is not None:
        return b_scale(pb, c)
    h = _b_gcd_heu(pa, pb)
    if h is None:
        h = _b_gcd_subres(pa, pb)
    return b_scale(h, c)


def _b_maxnorm(a):
    return max(abs(w) for v in a for w in v)


def _b_gcd_heu(a, b):
    # evaluate t at an integer, take the univariate gcd in x, lift the
    # coefficients back t-adically and confirm by trial division
    na, nb = _b_maxnorm(a), _b_maxnorm(b)
    bound = 2 * min(na, nb) + 29
    xi = max(min(bound, 99 * isqrt(bound)),
             2 * max(_maxnorm(a[-1]), _maxnorm(b[-1])) + 2)
    for _ in range(6):
        ea, eb = b_eval_t(a, xi), b_eval_t(b, xi)
        if len(ea) == len(a) and len(eb) == len(b):
            hx = u_gcd(ea, eb)
            if len(hx) == 1:
                return ((1,),)
            h = tuple(_interpolate(v, xi) for v in hx)
            h = _strip(list(h))
            if h:
                h = _b_primitive(h)
                if b_divexact(a, h) is not None and b_divexact(b, h) is not None:
                    return h
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    return None


def b_eval_t(a, v):
    """Substitute the integer ``v`` for ``t``; returns a ``Z[x]`` tuple."""
    return _strip([u_eval(c, v) for c in a])
