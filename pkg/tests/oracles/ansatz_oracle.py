"""Bounded-degree antiderivative search, independent of the library.

For A = Q(x)[D]/<L> with L = sum l_k D^k, an element is a coefficient vector
in the power basis 1, D, ..., D^(n-1).  We look for G = sum (P_k / Den) D^k
with deg P_k <= cap + deg Den and solve G' = f as a linear system over Q.
"""

from sympy import Poly, Symbol, cancel, diff, fraction, lcm, linear_eq_to_matrix, symbols, sympify
from sympy.polys.matrices import DomainMatrix

x = Symbol("x")


def _parse(s):
    return sympify(s.replace("^", "**"), locals={"x": x})


def derive(L, a):
    """Power-basis coordinates of the derivative of a (D a reduced mod L)."""
    n = len(L) - 1
    out = [diff(c, x) for c in a] + [0]
    for k in range(n):
        out[k + 1] += a[k]
    top = out.pop()
    for k in range(n):
        out[k] = cancel(out[k] - top * L[k] / L[n])
    return out


def find_antiderivative(L_strs, f_strs, cap=12):
    L = [_parse(s) for s in L_strs]
    n = len(L) - 1
    f = [_parse(s) for s in f_strs] + [0] * (n - len(f_strs))
    den = 1
    for c in f:
        den = lcm(den, fraction(cancel(c))[1])
    lead = fraction(cancel(L[n]))[0]
    den = Poly(den * lead, x).as_expr()
    N = cap + Poly(den, x).degree()
    unknowns = []
    G = []
    for k in range(n):
        cs = symbols("c%d_0:%d" % (k, N + 1))
        unknowns.extend(cs)
        G.append(sum(c * x ** j for j, c in enumerate(cs)) / den)
    dG = derive(L, G)
    eqs = []
    for a, b in zip(dG, f):
        num = fraction(cancel(a - b))[0]
        eqs.extend(Poly(num, x).coeffs())
    A, rhs = linear_eq_to_matrix(eqs, unknowns)
    M = DomainMatrix.from_Matrix(A.row_join(rhs)).to_field()
    rref, piv = M.rref()
    m = len(unknowns)
    if m in piv:
        return None
    sol = [0] * m
    R = rref.to_Matrix()
    for r, p in enumerate(piv):
        sol[p] = R[r, m]
    sub = dict(zip(unknowns, sol))
    return [cancel(g.subs(sub)) for g in G]


def check(L_strs, f_strs, G):
    L = [_parse(s) for s in L_strs]
    f = [_parse(s) for s in f_strs]
    f = f + [0] * (len(L) - 1 - len(f))
    G = [_parse(g) if isinstance(g, str) else g for g in G]
    return all(cancel(a - b) == 0 for a, b in zip(derive(L, G), f))
