"""gcd-based operations in K[x]: squarefree factorization, inverses modulo v,
and the coprime splitting h = r e + s d."""

from .polyx import ONE, ZERO, poly_gcd


def squarefree_factorization(p):
    """Yun's algorithm.  Returns [(factor, multiplicity), ...] with monic,
    pairwise coprime, squarefree factors and increasing multiplicities."""
    if not p:
        raise ValueError("squarefree factorization of zero")
    a = p.monic()
    if a.degree() <= 0:
        return []
    b = a.deriv()
    c = poly_gcd(a, b)
    w = a.divexact(c)
    y = b.divexact(c)
    z = y - w.deriv()
    out, i = [], 1
    while w.degree() > 0:
        g = poly_gcd(w, z)
        if g.degree() > 0:
            out.append((g, i))
        w = w.divexact(g)
        y = z.divexact(g)
        z = y - w.deriv()
        i += 1
    return out


def squarefree_part(p):
    r = ONE
    for f, _ in squarefree_factorization(p):
        r = r * f
    return r


def ext_gcd(a, b):
    """(g, s, t) with s a + t b = g monic."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return ZERO, ZERO, ZERO
    c = r0.lc().inv()
    return r0.scale(c), s0.scale(c), t0.scale(c)


def invmod(a, m):
    """Inverse of a modulo m; raises ZeroDivisionError when gcd(a, m) != 1."""
    if m.degree() <= 0:
        return ZERO
    a = a % m
    if not a:
        raise ZeroDivisionError("not invertible modulo %s" % m)
    g, s, _ = ext_gcd(a, m)
    if g.degree() != 0:
        raise ZeroDivisionError("not invertible modulo %s" % m)
    return s % m


def diophantine_split(h, e, d):
    """h = r e + s d with deg r < deg d; requires gcd(e, d) = 1."""
    if poly_gcd(e, d).degree() != 0:
        raise ValueError("e and d are not coprime")
    if not h:
        return ZERO, ZERO
    if d.degree() == 0:
        return ZERO, h.scale(d.lc().inv())
    r = (h * invmod(e, d)) % d
    s = (h - r * e).divexact(d)
    assert s is not None
    return r, s
