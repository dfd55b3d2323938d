"""Series at infinity for the two solutions of the parametrized system.

F1 = x^-2 log(x^-2 - t^2) sqrt((1+tx)/(1-tx)) and F2 = x^-2 sqrt(...) span the
solutions of L.  An element a0 + a1 D of A acts on them; in z = 1/x the
element has an m-fold root at infinity when every image is O(z^m).
"""

from sympy import Order, diff, log, series, sqrt, symbols

x, t, z = symbols("x t z", positive=True)
_s = sqrt((1 + t * x) / (1 - t * x))
SOLUTIONS = (x ** -2 * log(1 / x ** 2 - t ** 2) * _s, x ** -2 * _s)


def act(a0, a1, y):
    return a0 * y + a1 * diff(y, x)


def order_at_infinity(a0, a1, n=4):
    """Minimum over both solutions of the z-order of (a0 + a1 D) y."""
    out = n
    for y in SOLUTIONS:
        s = series(act(a0, a1, y).subs(x, 1 / z), z, 0, n).removeO()
        s = s.expand()
        if s == 0:
            continue
        out = min(out, min(term.as_coeff_exponent(z)[1] for term in s.as_ordered_terms()))
    return out


def nu(i):
    if i == 1:
        return (t * x - 1) * x, 0
    return 2 * t ** 2 * (t * x - 1) * x ** 2, (t ** 2 * x ** 2 - 1) * (t * x - 1) * x


__all__ = ["order_at_infinity", "nu", "x", "t", "z", "Order"]
