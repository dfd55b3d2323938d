"""Exact linear algebra over K and K(x), plus solving modulo a squarefree v.

The field routines are written against the arithmetic protocol shared by
ParamRat and RatX (+, -, *, /, bool), so they serve both levels.
"""

from .ops import invmod
from .polyx import ZERO as PZERO


def rref(rows, ncols=None, track=False):
    """Reduced row echelon form.

    Pivots are searched column by column from the left; inside a column the
    first nonzero row wins.  Returns (R, pivots) or, with ``track``, also the
    transform T with T * rows = R (T as a list of rows).
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    T = None
    if track:
        T = [[_one_like(rows, i, j) for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            if track:
                T[p], T[r] = T[r], T[p]
        inv = rows[r][c].inv()
        rows[r] = [v * inv if v else v for v in rows[r]]
        if track:
            T[r] = [v * inv if v else v for v in T[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
                if track:
                    T[i] = [a - f * b if b else a for a, b in zip(T[i], T[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if track:
        return rows, pivots, T
    return rows, pivots


def _one_like(rows, i, j):
    z = _zero_of(rows)
    return z + 1 if i == j else z


def _zero_of(rows):
    for r in rows:
        for v in r:
            return v - v
    raise ValueError("empty matrix")


def rank(M):
    return len(rref(M)[1]) if M else 0


def nullspace(M, ncols=None):
    """Right kernel basis of M (list of rows)."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if not M:
        raise ValueError("nullspace needs at least one row or explicit ncols")
    R, piv = rref(M, ncols)
    z = _zero_of(M)
    one = z + 1
    out = []
    pset = set(piv)
    for f in range(ncols):
        if f in pset:
            continue
        v = [z] * ncols
        v[f] = one
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        out.append(v)
    return out


def nullspace_over_K(M):
    return nullspace(M)


def left_nullspace(M):
    """Row vectors a with a * M = 0."""
    return nullspace(transpose(M), len(M))


def transpose(M):
    return [list(r) for r in zip(*M)]


def matmul(A, B):
    z = _zero_of(A) if A and A[0] else 0
    n = len(B[0]) if B else 0
    out = []
    for r in A:
        row = []
        for j in range(n):
            s = z
            for k, a in enumerate(r):
                if a:
                    b = B[k][j]
                    if b:
                        s = s + a * b
            row.append(s)
        out.append(row)
    return out


def vecmat(v, M):
    """Row vector times matrix."""
    n = len(M[0]) if M else 0
    out = []
    for j in range(n):
        s = None
        for k, a in enumerate(v):
            if a:
                b = M[k][j]
                if b:
                    s = a * b if s is None else s + a * b
        out.append(s if s is not None else (v[0] - v[0]))
    return out


def inverse(M):
    n = len(M)
    z = _zero_of(M)
    one = z + 1
    aug = [list(r) + [one if i == j else z for j in range(n)] for i, r in enumerate(M)]
    R, piv = rref(aug, n)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in R]


def solve(M, b):
    """Solve M y = b (square, nonsingular)."""
    n = len(M)
    aug = [list(r) + [b[i]] for i, r in enumerate(M)]
    R, piv = rref(aug, n)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [R[i][n] for i in range(n)]


def det(M):
    """Determinant by elimination over a field."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    z = _zero_of(A)
    d = z + 1
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return z
        if p != c:
            A[p], A[c] = A[c], A[p]
            d = -d
        d = d * A[c][c]
        inv = A[c][c].inv()
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return d


def det_poly(M):
    """Fraction-free (Bareiss) determinant of a PolyX matrix."""
    n = len(M)
    A = [list(r) for r in M]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not A[k][k]:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                return PZERO
            A[p], A[k] = A[k], A[p]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = v if prev is None else v.divexact(prev)
        prev = A[k][k]
    d = A[n - 1][n - 1] if n else None
    return -d if sign < 0 else d


def solve_mod_v(S, rhs, v):
    """Representatives g (deg < deg v) of S g = rhs modulo v, by Cramer's rule.

    Raises ZeroDivisionError when det S is not a unit modulo v.
    """
    n = len(S)
    Sr = [[a % v for a in row] for row in S]
    rr = [b % v for b in rhs]
    D = det_poly(Sr) % v
    Dinv = invmod(D, v)
    out = []
    for i in range(n):
        Si = [[rr[r] if c == i else Sr[r][c] for c in range(n)] for r in range(n)]
        out.append((det_poly(Si) * Dinv) % v)
    return out


class EchelonReducer:
    """Fully reduced echelon basis of a span of sparse vectors over K.

    Vectors are dicts ``{column_key: value}``.  ``order`` maps a key to its
    sort position; the pivot of a row is its first nonzero column in that
    order.  ``reduce`` returns the canonical remainder together with the
    combination of the generating vectors that was subtracted.
    """

    def __init__(self, vectors, order):
        self.order = order
        self.rows = []       # (pivot, row dict, transform dict over generator ids)
        self.ngen = len(vectors)
        for gid, vec in enumerate(vectors):
            self._insert(dict(vec), {gid: 1})

    def _lead(self, vec):
        keys = [k for k, v in vec.items() if v]
        if not keys:
            return None
        return min(keys, key=self.order)

    @staticmethod
    def _axpy(dst, a, src):
        # dst -= a * src
        for k, v in src.items():
            w = dst.get(k)
            nv = -(a * v) if w is None else w - a * v
            if nv:
                dst[k] = nv
            elif w is not None:
                del dst[k]

    def _insert(self, vec, tr):
        for piv, row, rtr in self.rows:
            a = vec.get(piv)
            if a:
                self._axpy(vec, a, row)
                self._axpy(tr, a, rtr)
        p = self._lead(vec)
        if p is None:
            return False
        inv = vec[p].inv()
        vec = {k: v * inv for k, v in vec.items()}
        tr = {k: v * inv for k, v in tr.items()}
        for i, (piv, row, rtr) in enumerate(self.rows):
            a = row.get(p)
            if a:
                self._axpy(row, a, vec)
                self._axpy(rtr, a, tr)
        self.rows.append((p, vec, tr))
        self.rows.sort(key=lambda r: self.order(r[0]))
        return True

    @property
    def pivots(self):
        return [p for p, _, _ in self.rows]

    def reduce(self, vec):
        """(remainder, combination) with vec = remainder + sum comb[g] * gen[g]."""
        vec = dict(vec)
        comb = {}
        for piv, row, rtr in self.rows:
            a = vec.get(piv)
            if a:
                self._axpy(vec, a, row)
                for k, v in rtr.items():
                    w = comb.get(k)
                    comb[k] = a * v if w is None else w + a * v
        return vec, {k: v for k, v in comb.items() if v}

    def contains(self, vec):
        return not self.reduce(vec)[0]
