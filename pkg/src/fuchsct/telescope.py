"""Creative telescoping by reduction: find the first K-linear dependence
among the reduced forms [dt^i f]."""

from .algebra import kernels as Kn
from .algebra.linalg import EchelonReducer
from .algebra.paramrat import ZERO as K_ZERO
from .algebra.paramrat import ParamRat
from .algebra.polyx import PolyX, poly_lcm
from .algebra.ratx import ZERO as R_ZERO
from .algebra.ratx import RatX
from .hermite import DoubleRootError, UReducer, hermite_reduce, reduce_mod_U
from .ore import clear_op, mobius_integrand, mobius_point, mobius_substitute, substitute_op
from .polyred import PhiContext, additive_decompose


class TelescopeError(RuntimeError):
    pass


class Telescoper:
    def __init__(self, coeffs, method, certificate=None, reduced=None, hypothesis=None):
        self.coeffs = coeffs
        self.method = method
        self.certificate = certificate
        self.reduced = reduced or []
        self.verified = False
        # per iterate: did it have a double root at infinity (canonical method only)
        self.hypothesis = hypothesis

    @property
    def minimal_certified(self):
        return self.hypothesis is None or all(self.hypothesis)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def strings(self):
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return "Telescoper(%s)" % ", ".join(self.strings())


def normalize_coeffs(ps):
    """Scale to coprime polynomials in t, leading coefficient of p_r positive."""
    den = (1,)
    for p in ps:
        if p:
            den = Kn.u_mul(den, Kn.u_divexact(p.den, Kn.u_gcd(den, p.den)))
    nums = [Kn.u_mul(p.num, Kn.u_divexact(den, p.den)) if p else () for p in ps]
    g = ()
    for v in nums:
        if v:
            g = Kn.u_gcd(g, v) if g else v
    out = [Kn.u_divexact(v, g) if v else () for v in nums]
    if out[-1] and out[-1][-1] < 0:
        out = [Kn.u_neg(v) for v in out]
    return [ParamRat.make(v, (1,)) if v else K_ZERO for v in out]


def check_double_root_infinity(f, V):
    """x^2 f integral at infinity, read off in the local frame V."""
    c = V.from_w(V.W.coords(f))
    x2 = RatX.x() ** 2
    return all(not ci or (ci * x2).valuation_inf() >= 0 for ci in c)


def double_root_offer(module, W, f=None):
    """Substituted data (point a, L, U, f) for inputs that fail the check."""
    lc = clear_op(module.L).coeffs[-1].to_polyx()
    a = mobius_point(W.e, lc)
    out = {"a": a, "L": mobius_substitute(module.L, a)}
    if module.U is not None:
        out["U"] = substitute_op(module.U, a)
    if f is not None:
        out["f"] = mobius_integrand(f.to_op(), a)
    return out


def require_double_root(f, V):
    if not check_double_root_infinity(f, V):
        raise DoubleRootError(
            "f does not have a double root at infinity; substitute x -> a + 1/x "
            "(mobius_substitute) and supply integral bases for the new operator",
            offer=double_root_offer(V.W.module, V.W, f))


def default_max_order(n, d, dim_nv):
    return n * d.degree() + dim_nv + 2


# -- keyed vectors -----------------------------------------------------------

def _vec(d_common, d, R, Q):
    """Coefficient dict of (R over the common d, Q)."""
    out = {}
    mult = d_common.divexact(d)
    for i, r in enumerate(R):
        if r:
            r = r * mult
            for k, c in enumerate(r.coeffs()):
                if c:
                    out[(0, -k, i)] = c
    for key, c in Q.items():
        i, k = key
        out[(1, -k, i)] = c
    return out


def _order(key):
    return key


class _Dependence:
    """Incremental search for the first K-linear dependence among the
    reduced forms; restarted when the common d grows."""

    def __init__(self):
        self.items = []   # (d, R, Qdict)
        self.d = PolyX.const(1)
        self.ech = None

    def _rebuild(self):
        self.ech = EchelonReducer([], _order)
        for gid, (d, R, Q) in enumerate(self.items):
            self.ech.ngen = gid + 1
            self.ech._insert(_vec(self.d, d, R, Q), {gid: ParamRat(1)})

    def push(self, d, R, Q):
        """Returns the coefficient vector p_0..p_r (p_r = 1) on dependence, else None."""
        nd = poly_lcm(self.d, d)
        if nd != self.d or self.ech is None:
            self.d = nd
            self._rebuild()
        v = _vec(self.d, d, R, Q)
        rem, comb = self.ech.reduce(v)
        if not rem:
            r = len(self.items)
            ps = [K_ZERO] * (r + 1)
            for gid, c in comb.items():
                ps[gid] = -c
            ps[r] = ParamRat(1)
            return ps
        self.items.append((d, R, Q))
        self.ech.ngen = len(self.items)
        self.ech._insert(v, {len(self.items) - 1: ParamRat(1)})
        return None


def _dt_coords(W, c):
    return W.coords(W.element(c).dt())


def _search(f, W, reduce_fn, max_order, incremental, certificate, check=None):
    """Shared driver.  reduce_fn(coords) -> (d, R, Qdict, g, rem_coords)."""
    c = W.coords(f)
    flags = []
    dep = _Dependence()
    gs = []
    reduced = []
    cur_g = [R_ZERO] * W.n
    for i in range(max_order + 1):
        if check is not None:
            flags.append(check(c))
        d, R, Q, g, rem = reduce_fn(c)
        if incremental:
            g = [a + b for a, b in zip(cur_g, g)]
        gs.append(g)
        reduced.append((d, R, Q))
        ps = dep.push(d, R, Q)
        if ps is not None:
            ps = normalize_coeffs(ps)
            G = None
            if certificate:
                G = [R_ZERO] * W.n
                for p, gi in zip(ps, gs):
                    if p:
                        G = [a + b.scale(p) if b else a for a, b in zip(G, gi)]
            return ps, G, reduced, flags
        if incremental:
            # dt f_i = (dt g_i)' + dt rem_i
            cur_g = _dt_coords(W, g)
            c = _dt_coords(W, rem)
        else:
            c = _dt_coords(W, c)
    raise TelescopeError("no telescoper of order <= %d found; inputs are inconsistent "
                         "or max_order is too small" % max_order)


def telescope_polyred(f, W, V, max_order=None, incremental=False, certificate=False,
                      ctx=None, seed=0):
    require_double_root(f, V)
    ctx = ctx or PhiContext(V, seed=seed)

    def red(c):
        dec = additive_decompose(c, W, V, ctx)
        return dec.d, dec.R, dec.Q.terms, dec.g, dec.remainder_coords()

    if max_order is None:
        d0 = additive_decompose(W.coords(f), W, V, ctx).d
        max_order = default_max_order(W.n, d0, ctx.dim_nv())
    ps, G, reduced, _ = _search(f, W, red, max_order, incremental, certificate)
    return Telescoper(ps, "polyred", G, reduced)


def telescope_canonical(f, W, V, vspace, max_order=None, incremental=False,
                        certificate=False, seed=0):
    """Dependence among Hermite remainders reduced modulo U.

    The reduced form detects integrability only for inputs with a double root
    at infinity; each iterate is checked and the outcome stored in
    ``hypothesis``.  The returned operator is always a telescoper, minimality
    is certified only when every iterate passed.
    """
    require_double_root(f, V)
    ured = UReducer(vspace)

    def red(c):
        hf = hermite_reduce(c, W)
        r = reduce_mod_U(hf, vspace, ured)
        Q = {}
        for i, s in enumerate(r.S):
            for k, cf in enumerate(s.coeffs()):
                if cf:
                    Q[(i, k)] = cf
        return r.d, r.R, Q, r.g, r.coords()

    if max_order is None:
        ctx = PhiContext(V, seed=seed)
        d0 = hermite_reduce(W.coords(f), W).d
        max_order = default_max_order(W.n, d0, ctx.dim_nv())
    def check(c):
        return check_double_root_infinity(W.element(c), V)

    ps, G, reduced, flags = _search(f, W, red, max_order, incremental, certificate, check)
    return Telescoper(ps, "canonical", G, reduced, hypothesis=flags)


class VerificationError(AssertionError):
    pass


def apply_telescoper(P, f):
    acc = f.module.zero()
    cur = f
    for i, p in enumerate(P.coeffs):
        if i:
            cur = cur.dt()
        if p:
            acc = acc + cur.scale(RatX(p))
    return acc


def verify_telescoper(P, f, W, V, ctx=None):
    """Check that P f is integrable (R = Q = 0), and G' = P f when a certificate is attached."""
    Pf = apply_telescoper(P, f)
    dec = additive_decompose(W.coords(Pf), W, V, ctx)
    if not dec.is_zero():
        raise VerificationError("P f is not integrable: R = %s, Q = %s"
                                % ([str(r) for r in dec.R], dec.Q))
    proof = {"residual_R": [], "residual_Q": [], "certificate_checked": False}
    if P.certificate is not None:
        dG = W.deriv_coords(P.certificate)
        res = [a - b for a, b in zip(W.coords(Pf), dG)]
        if any(res):
            raise VerificationError("certificate residual %s" % [str(r) for r in res])
        proof["certificate_checked"] = True
    P.verified = True
    return proof


__all__ = ["Telescoper", "TelescopeError", "DoubleRootError", "VerificationError",
           "normalize_coeffs", "check_double_root_infinity", "telescope_polyred",
           "telescope_canonical", "verify_telescoper", "apply_telescoper",
           "default_max_order", "double_root_offer", "require_double_root"]
