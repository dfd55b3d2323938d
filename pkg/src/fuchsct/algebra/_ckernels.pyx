# cython: language_level=3, boundscheck=False, wraparound=False
"""Dense integer polynomial kernels, compiled version.

Same data layout and results as ``_pykernels``; loops run over C indices and
lists are preallocated.  Coefficients stay Python ints (arbitrary precision).
"""

from math import gcd as igcd
from math import isqrt


cdef tuple _strip(list c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


cpdef tuple u_add(tuple a, tuple b):
    cdef Py_ssize_t i, lb
    if len(a) < len(b):
        a, b = b, a
    lb = len(b)
    if not lb:
        return a
    cdef list c = list(a)
    for i in range(lb):
        c[i] = c[i] + b[i]
    return _strip(c)


cpdef tuple u_neg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef list c = [None] * n
    for i in range(n):
        c[i] = -a[i]
    return tuple(c)


cpdef tuple u_sub(tuple a, tuple b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    if not lb:
        return a
    cdef list c = list(a)
    if lb > la:
        c.extend([0] * (lb - la))
    for i in range(lb):
        c[i] = c[i] - b[i]
    return _strip(c)


cpdef tuple u_mul(tuple a, tuple b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    cdef object ai, s
    if not la or not lb:
        return ()
    cdef list c
    if la == 1:
        s = a[0]
        c = [None] * lb
        for j in range(lb):
            c[j] = s * b[j]
        return tuple(c)
    if lb == 1:
        s = b[0]
        c = [None] * la
        for i in range(la):
            c[i] = s * a[i]
        return tuple(c)
    c = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                c[i + j] = c[i + j] + ai * b[j]
    return tuple(c)


cpdef tuple u_scale(tuple a, object s):
    cdef Py_ssize_t i, n = len(a)
    if not s:
        return ()
    if s == 1:
        return a
    cdef list c = [None] * n
    for i in range(n):
        c[i] = s * a[i]
    return tuple(c)


cpdef tuple u_deriv(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef list c = [None] * (n - 1 if n else 0)
    for i in range(1, n):
        c[i - 1] = i * a[i]
    return _strip(c)


cpdef object u_content(tuple a):
    cdef object g = 0
    for v in a:
        g = igcd(g, v)
        if g == 1:
            return 1
    return g


cpdef tuple u_divexact_int(tuple a, object s):
    cdef Py_ssize_t i, n = len(a)
    cdef list c = [None] * n
    for i in range(n):
        c[i] = a[i] // s
    return tuple(c)


cpdef tuple u_primitive(tuple a):
    if not a:
        return a
    cdef object g = u_content(a)
    if a[len(a) - 1] < 0:
        g = -g
    if g == 1:
        return a
    return u_divexact_int(a, g)


cpdef object u_divexact(tuple a, tuple b):
    cdef Py_ssize_t i, j, k, la = len(a), lb = len(b)
    cdef object v, lc, c, s
    if not lb:
        raise ZeroDivisionError("polynomial division by zero")
    if not la:
        return ()
    if la < lb:
        return None
    cdef list q
    if lb == 1:
        s = b[0]
        q = [None] * la
        for i in range(la):
            v = a[i]
            if v % s:
                return None
            q[i] = v // s
        return tuple(q)
    cdef list r = list(a)
    lc = b[lb - 1]
    q = [0] * (la - lb + 1)
    for k in range(la - lb, -1, -1):
        v = r[k + lb - 1]
        if v:
            if v % lc:
                return None
            c = v // lc
            q[k] = c
            for j in range(lb):
                r[k + j] = r[k + j] - c * b[j]
    for i in range(lb - 1):
        if r[i]:
            return None
    return tuple(q)


cpdef tuple u_prem(tuple a, tuple b):
    cdef Py_ssize_t i, j, k, la = len(a), lb = len(b), n
    cdef object lc, c
    if la < lb:
        return a
    cdef list r = list(a)
    lc = b[lb - 1]
    n = la
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        for i in range(n):
            r[i] = lc * r[i]
        if c:
            for j in range(lb):
                r[k + j] = r[k + j] - c * b[j]
        n -= 1
    return _strip(r[:n])


cpdef object u_eval(tuple a, object v):
    cdef Py_ssize_t i
    cdef object r = 0
    for i in range(len(a) - 1, -1, -1):
        r = r * v + a[i]
    return r


cdef object _maxnorm(tuple a):
    cdef object m = 0, w
    for v in a:
        w = abs(v)
        if w > m:
            m = w
    return m


cdef tuple _interpolate(object h, object xi):
    cdef list out = []
    cdef object half = xi // 2, g
    while h:
        g = h % xi
        if g > half:
            g -= xi
        out.append(g)
        h = (h - g) // xi
    return _strip(out)


cdef tuple _u_gcd_prs(tuple a, tuple b):
    cdef tuple r
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = u_prem(a, b)
        a, b = b, (u_primitive(r) if r else ())
        if len(b) == 1:
            return (1,)
    return u_primitive(a)


cpdef tuple u_gcd(tuple a, tuple b):
    cdef Py_ssize_t it
    if not a:
        return b if not b or b[len(b) - 1] > 0 else u_neg(b)
    if not b:
        return a if a[len(a) - 1] > 0 else u_neg(a)
    cdef object ca = u_content(a), cb = u_content(b)
    cdef object c = igcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return (c,)
    if a == b:
        return u_scale(u_primitive(a), c)
    cdef tuple fa = u_divexact_int(a, ca), fb = u_divexact_int(b, cb), h
    cdef object na = _maxnorm(fa), nb = _maxnorm(fb)
    cdef object bound = 2 * min(na, nb) + 29
    cdef object xi = max(min(bound, 99 * isqrt(bound)),
                         2 * min(na // abs(fa[len(fa) - 1]),
                                 nb // abs(fb[len(fb) - 1])) + 2)
    cdef object va, vb
    for it in range(6):
        va = u_eval(fa, xi)
        vb = u_eval(fb, xi)
        if va and vb:
            h = _interpolate(igcd(va, vb), xi)
            if h:
                h = u_primitive(h)
                if u_divexact(fa, h) is not None and u_divexact(fb, h) is not None:
                    return u_scale(h, c)
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    fa = u_primitive(fa)
    fb = u_primitive(fb)
    return u_scale(_u_gcd_prs(fa, fb), c)


# -- bivariate ----------------------------------------------------------------

cpdef tuple b_add(tuple a, tuple b):
    cdef Py_ssize_t i, lb
    if len(a) < len(b):
        a, b = b, a
    lb = len(b)
    if not lb:
        return a
    cdef list c = list(a)
    for i in range(lb):
        if b[i]:
            c[i] = u_add(<tuple>c[i], <tuple>b[i])
    return _strip(c)


cpdef tuple b_neg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef list c = [None] * n
    for i in range(n):
        c[i] = u_neg(<tuple>a[i])
    return tuple(c)


cpdef tuple b_sub(tuple a, tuple b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    if not lb:
        return a
    cdef list c = list(a)
    if lb > la:
        c.extend([()] * (lb - la))
    for i in range(lb):
        if b[i]:
            c[i] = u_sub(<tuple>c[i], <tuple>b[i])
    return _strip(c)


cpdef tuple b_mul(tuple a, tuple b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    cdef tuple ai, bj
    if not la or not lb:
        return ()
    cdef list c = [()] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    c[i + j] = u_add(<tuple>c[i + j], u_mul(ai, bj))
    return _strip(c)


cpdef tuple b_scale(tuple a, tuple u):
    cdef Py_ssize_t i, n = len(a)
    if not u:
        return ()
    if u == (1,):
        return a
    cdef list c = [None] * n
    for i in range(n):
        c[i] = u_mul(<tuple>a[i], u)
    return tuple(c)


cpdef tuple b_scale_int(tuple a, object s):
    cdef Py_ssize_t i, n = len(a)
    if not s:
        return ()
    if s == 1:
        return a
    cdef list c = [None] * n
    for i in range(n):
        c[i] = u_scale(<tuple>a[i], s)
    return tuple(c)


cpdef tuple b_deriv_x(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef list c = [None] * (n - 1 if n else 0)
    for i in range(1, n):
        c[i - 1] = u_scale(<tuple>a[i], i)
    return _strip(c)


cpdef tuple b_deriv_t(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef list c = [None] * n
    for i in range(n):
        c[i] = u_deriv(<tuple>a[i])
    return _strip(c)


cpdef tuple b_content(tuple a):
    cdef Py_ssize_t i, j, m
    if not a:
        return ()
    cdef list coeffs = sorted([v for v in a if v], key=len)
    cdef tuple g = ()
    cdef object ic
    m = len(coeffs)
    for i in range(m):
        g = u_gcd(g, <tuple>coeffs[i])
        if len(g) == 1:
            ic = g[0]
            for j in range(i + 1, m):
                if ic == 1:
                    break
                ic = igcd(ic, u_content(<tuple>coeffs[j]))
            g = (ic,)
            break
    cdef tuple top = a[len(a) - 1]
    if top[len(top) - 1] < 0:
        g = u_neg(g)
    return g


cpdef object b_divexact_u(tuple a, tuple u):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    cdef object q
    for i in range(n):
        if a[i]:
            q = u_divexact(<tuple>a[i], u)
            if q is None:
                return None
            out[i] = q
        else:
            out[i] = ()
    return tuple(out)


cpdef object b_divexact(tuple a, tuple b):
    cdef Py_ssize_t i, j, k, la = len(a), lb = len(b)
    cdef tuple lc, v
    cdef object c
    if not lb:
        raise ZeroDivisionError("polynomial division by zero")
    if not la:
        return ()
    if la < lb:
        return None
    if lb == 1:
        return b_divexact_u(a, <tuple>b[0])
    cdef list r = list(a)
    lc = b[lb - 1]
    cdef list q = [()] * (la - lb + 1)
    for k in range(la - lb, -1, -1):
        v = r[k + lb - 1]
        if v:
            c = u_divexact(v, lc)
            if c is None:
                return None
            q[k] = c
            for j in range(lb):
                if b[j]:
                    r[k + j] = u_sub(<tuple>r[k + j], u_mul(<tuple>c, <tuple>b[j]))
    for i in range(lb - 1):
        if r[i]:
            return None
    return tuple(q)


cpdef tuple b_prem(tuple a, tuple b):
    cdef Py_ssize_t i, j, k, la = len(a), lb = len(b), n
    cdef tuple lc, c
    if la < lb:
        return a
    cdef list r = list(a)
    lc = b[lb - 1]
    n = la
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        for i in range(n):
            r[i] = u_mul(lc, <tuple>r[i])
        if c:
            for j in range(lb):
                if b[j]:
                    r[k + j] = u_sub(<tuple>r[k + j], u_mul(c, <tuple>b[j]))
        n -= 1
    return _strip(r[:n])


cpdef tuple b_pdivrem(tuple a, tuple b):
    cdef Py_ssize_t i, j, k, la = len(a), lb = len(b)
    cdef tuple lc, c
    if la < lb:
        return (), a
    cdef list r = list(a)
    lc = b[lb - 1]
    cdef list q = [()] * (la - lb + 1)
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        for i in range(la - lb + 1):
            if q[i]:
                q[i] = u_mul(lc, <tuple>q[i])
        for i in range(k + lb - 1):
            r[i] = u_mul(lc, <tuple>r[i])
        if c:
            q[k] = c
            for j in range(lb - 1):
                if b[j]:
                    r[k + j] = u_sub(<tuple>r[k + j], u_mul(c, <tuple>b[j]))
        r.pop()
    return _strip(q), _strip(r)


cdef tuple _b_primitive(tuple a):
    cdef tuple c = b_content(a)
    if c == (1,):
        return a
    return b_divexact_u(a, c)


cdef tuple _u_pow(tuple a, Py_ssize_t k):
    cdef tuple r = (1,)
    cdef Py_ssize_t i
    for i in range(k):
        r = u_mul(r, a)
    return r


cdef tuple _b_gcd_subres(tuple a, tuple b):
    cdef tuple g = (1,), h = (1,), r, den
    cdef Py_ssize_t delta
    while True:
        delta = len(a) - len(b)
        r = b_prem(a, b)
        if not r:
            return _b_primitive(b)
        if len(r) == 1:
            return ((1,),)
        den = u_mul(g, _u_pow(h, delta))
        a, b = b, b_divexact_u(r, den)
        g = a[len(a) - 1]
        if delta:
            h = u_divexact(_u_pow(g, delta), _u_pow(h, delta - 1))


cdef object _b_maxnorm(tuple a):
    cdef object m = 0, w
    for v in a:
        for c in v:
            w = abs(c)
            if w > m:
                m = w
    return m


cdef object _b_gcd_heu(tuple a, tuple b):
    cdef Py_ssize_t it, i
    cdef object na = _b_maxnorm(a), nb = _b_maxnorm(b)
    cdef object bound = 2 * min(na, nb) + 29
    cdef object xi = max(min(bound, 99 * isqrt(bound)),
                         2 * max(_maxnorm(<tuple>a[len(a) - 1]),
                                 _maxnorm(<tuple>b[len(b) - 1])) + 2)
    cdef tuple ea, eb, hx, h
    cdef list hl
    for it in range(6):
        ea = b_eval_t(a, xi)
        eb = b_eval_t(b, xi)
        if len(ea) == len(a) and len(eb) == len(b):
            hx = u_gcd(ea, eb)
            if len(hx) == 1:
                return ((1,),)
            hl = [_interpolate(v, xi) for v in hx]
            h = _strip(hl)
            if h:
                h = _b_primitive(h)
                if b_divexact(a, h) is not None and b_divexact(b, h) is not None:
                    return h
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    return None


cpdef tuple b_gcd(tuple a, tuple b):
    if not a:
        return _b_primitive(b) if b else ()
    if not b:
        return _b_primitive(a)
    cdef tuple ca = b_content(a), cb = b_content(b)
    cdef tuple c = u_gcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return (c,)
    cdef tuple pa = b_divexact_u(a, ca), pb = b_divexact_u(b, cb)
    if pa == pb:
        return b_scale(pa, c)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    if b_divexact(pa, pb) is not None:
        return b_scale(pb, c)
    cdef object h = _b_gcd_heu(pa, pb)
    if h is None:
        h = _b_gcd_subres(pa, pb)
    return b_scale(<tuple>h, c)


cpdef tuple b_eval_t(tuple a, object v):
    cdef Py_ssize_t i, n = len(a)
    cdef list c = [None] * n
    for i in range(n):
        c[i] = u_eval(<tuple>a[i], v)
    return _strip(c)
