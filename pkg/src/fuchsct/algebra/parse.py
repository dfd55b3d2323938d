"""Expression grammar for elements of Q(t)(x) and the matching printers.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' unary)?
    atom   := INTEGER | 't' | 'x' | '(' expr ')'

``**`` is accepted as a synonym for ``^``.  Exponents must evaluate to integers.
Printed strings use the same grammar, so ``parse_expr(str(v)) == v``.
"""

import re

from .paramrat import ParamRat
from .polyx import PolyX
from .ratx import RatX

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([A-Za-z_]\w*))")


class ParseError(ValueError):
    def __init__(self, msg, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__("%s at line %d, column %d" % (msg, line, col))
        self.line, self.column, self.pos = line, col, pos


def _tokenize(text):
    toks, pos = [], 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character %r" % text[pos], text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(("op", "^" if m.group(2) == "**" else m.group(2), start))
        else:
            name = m.group(3)
            if name not in ("t", "x"):
                raise ParseError("unknown symbol %r" % name, text, start)
            toks.append(("sym", name, start))
        pos = m.end()
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def expr(self):
        v = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            w = self.unary()
            if tok[1] == "*":
                v = v * w
            else:
                if not w:
                    self.fail("division by zero", tok)
                v = v / w
        return v

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            tok = self.take()
            ex = self.unary()
            if not ex.is_const() or not ex.to_paramrat().is_const() or \
                    ex.to_paramrat().den != (1,):
                self.fail("exponent must be an integer", tok)
            k = ex.N[0][0] if ex.N else 0
            if k < 0 and not base:
                self.fail("zero to a negative power", tok)
            return base ** k
        return base

    def atom(self):
        tok = self.take()
        kind, val = tok[0], tok[1]
        if kind == "int":
            return RatX(val)
        if kind == "sym":
            return RatX.x() if val == "x" else RatX(ParamRat.t())
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return v
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail("unexpected token %r" % (val,), tok)


def parse_expr(text):
    """Parse an expression into a RatX."""
    if not isinstance(text, str):
        if isinstance(text, int):
            return RatX(text)
        raise ParseError("expected a string, got %s" % type(text).__name__)
    p = _Parser(text)
    if p.peek()[0] == "end":
        p.fail("empty expression")
    v = p.expr()
    if p.peek()[0] != "end":
        p.fail("unexpected token %r" % (p.peek()[1],))
    return v


def parse_paramrat(text):
    v = parse_expr(text)
    try:
        return v.to_paramrat()
    except ValueError:
        raise ParseError("expression depends on x: %r" % text) from None


def parse_polyx(text):
    v = parse_expr(text)
    try:
        return v.to_polyx()
    except ValueError:
        raise ParseError("expression is not polynomial in x: %r" % text) from None


# -- printing ---------------------------------------------------------------

def _mono(c, parts):
    # c: nonzero int, parts: list of "t^2", "x" ...; returns (sign, body)
    sign = "-" if c < 0 else "+"
    c = abs(c)
    if not parts:
        return sign, str(c)
    body = "*".join(parts)
    return sign, body if c == 1 else "%d*%s" % (c, body)


def _pw(s, k):
    return s if k == 1 else "%s^%d" % (s, k)


def _terms_b(P):
    # bivariate, x-degree descending then t-degree descending
    out = []
    for j in range(len(P) - 1, -1, -1):
        u = P[j]
        for i in range(len(u) - 1, -1, -1):
            c = u[i]
            if c:
                parts = ([_pw("t", i)] if i else []) + ([_pw("x", j)] if j else [])
                out.append(_mono(c, parts))
    return out


def _join(terms):
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += " %s %s" % (sign, body)
    return s


def _frac(nterms, dterms):
    num = _join(nterms)
    if dterms == [("+", "1")]:
        return num
    if len(nterms) > 1:
        num = "(" + num + ")"
    den = _join(dterms)
    if len(dterms) > 1 or "*" in den:
        den = "(" + den + ")"
    return num + "/" + den


def format_bpoly(P):
    return _join(_terms_b(P))


def format_upoly(u):
    return _join(_terms_b((u,)) if u else [])


def format_paramrat(c):
    return _frac(_terms_b((c.num,)) if c.num else [], _terms_b((c.den,)))


def format_polyx(p):
    return _frac(_terms_b(p.P), _terms_b((p.d,)))


def format_ratx(r):
    return _frac(_terms_b(r.N), _terms_b(r.D))


def format_value(v):
    if isinstance(v, RatX):
        return format_ratx(v)
    if isinstance(v, PolyX):
        return format_polyx(v)
    if isinstance(v, ParamRat):
        return format_paramrat(v)
    return str(v)
