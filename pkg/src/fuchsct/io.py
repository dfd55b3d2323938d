"""Problem files.

A problem is a JSON object::

    {"name": "...", "notes": "...",
     "L": ["c0", "c1", ...],            # ascending coefficients of L
     "U": ["u0", ...] or null,          # dt . 1 as an operator
     "W": [["w10", ...], ...],          # global integral basis
     "Vinf": [["v10", ...], ...],       # local integral basis at infinity
     "f": ["f0", ...]}                  # integrand (optional, default 1)

All expressions use the grammar of :mod:`fuchsct.algebra.parse`.
"""

import json
import os
from importlib import resources

from .algebra.parse import ParseError, format_ratx, parse_expr
from .basisframe import (BasisFrame, FrameError, VSpace, build_local_frame,
                         normalize_at_infinity)
from .ore import AModule, InconsistentAction, OreOp

FIXTURES = ("hermite_example", "integrable", "telescoping", "elliptic", "elliptic_moved")


class ProblemError(ValueError):
    """Carries a list of diagnostics, each a dict with at least ``where`` and ``message``."""

    def __init__(self, diagnostics):
        self.diagnostics = diagnostics
        super().__init__("; ".join("%s: %s" % (d["where"], d["message"]) for d in diagnostics))


def _locate(text, literal):
    """(line, column) of the first occurrence of a JSON string literal."""
    if text is None:
        return None
    i = text.find(json.dumps(literal))
    if i < 0:
        return None
    line = text.count("\n", 0, i) + 1
    col = i - (text.rfind("\n", 0, i) + 1) + 1
    return line, col + 1  # skip the opening quote


class ProblemFile:
    def __init__(self, L, U=None, W=(), Vinf=(), f=None, name="", notes=""):
        self.L = L
        self.U = U
        self.W = list(W)
        self.Vinf = list(Vinf)
        self.f = f if f is not None else OreOp([1])
        self.name = name
        self.notes = notes

    def __eq__(self, other):
        return isinstance(other, ProblemFile) and \
            (self.L, self.U, self.W, self.Vinf, self.f, self.name, self.notes) == \
            (other.L, other.U, other.W, other.Vinf, other.f, other.name, other.notes)

    def to_dict(self):
        def op(P):
            return [format_ratx(c) for c in P.coeffs] or ["0"]
        return {"name": self.name, "notes": self.notes, "L": op(self.L),
                "U": op(self.U) if self.U is not None else None,
                "W": [op(w) for w in self.W], "Vinf": [op(v) for v in self.Vinf],
                "f": op(self.f)}

    def build(self, check_action=True):
        """Module, frames and derived data; raises ProblemError on semantic failures."""
        return Problem(self, check_action=check_action)


class Problem:
    """Everything derived from a ProblemFile."""

    def __init__(self, pf, check_action=True):
        self.file = pf
        diag = []
        try:
            self.module = AModule(pf.L, pf.U, check=check_action)
        except InconsistentAction as exc:
            raise ProblemError([{"where": "U", "message": str(exc)}]) from None
        except (ValueError, ZeroDivisionError) as exc:
            raise ProblemError([{"where": "L", "message": str(exc)}]) from None
        n = self.module.n
        for key in ("W", "Vinf"):
            m = len(getattr(pf, key))
            if m != n:
                diag.append({"where": key, "message": "expected %d basis elements, got %d"
                             % (n, m)})
        if diag:
            raise ProblemError(diag)
        try:
            self.W = BasisFrame(self.module, pf.W, name="W")
        except FrameError as exc:
            raise ProblemError([{"where": "W", "message": str(exc)}]) from None
        if not self.W.e_squarefree():
            diag.append({"where": "W", "message": "e = %s is not squarefree; W is not an "
                         "integral basis" % self.W.e})
        try:
            self.Nu = BasisFrame(self.module, pf.Vinf, name="Vinf")
        except FrameError as exc:
            raise ProblemError([{"where": "Vinf", "message": str(exc)}]) from None
        if not self.Nu.is_local_at_infinity():
            diag.append({"where": "Vinf", "message": "deg M >= deg e; Vinf is not integral "
                         "at infinity"})
        if diag:
            raise ProblemError(diag)
        try:
            self.Wn, self.tau, self.norm_info = normalize_at_infinity(self.W, self.Nu)
            self.V = build_local_frame(self.Wn, self.tau)
        except FrameError as exc:
            raise ProblemError([{"where": "W", "message": str(exc)}]) from None
        self.vspace = VSpace(self.Wn, self.tau)
        self.f = self.module.reduce(pf.f)


def _parse_op(obj, where, text, diags):
    if not isinstance(obj, list) or not obj:
        diags.append({"where": where, "message": "expected a nonempty list of expressions"})
        return None
    cs = []
    for k, s in enumerate(obj):
        w = "%s[%d]" % (where, k)
        if not isinstance(s, (str, int)):
            diags.append({"where": w, "message": "expected an expression string"})
            return None
        try:
            cs.append(parse_expr(str(s)))
        except ParseError as exc:
            d = {"where": w, "message": str(exc), "column": exc.column}
            loc = _locate(text, s) if isinstance(s, str) else None
            if loc:
                d["line"] = loc[0]
                d["column"] = loc[1] + exc.column - 1
            diags.append(d)
            return None
    return OreOp(cs)


def problem_from_dict(data, text=None):
    diags = []
    if not isinstance(data, dict):
        raise ProblemError([{"where": "<root>", "message": "expected a JSON object"}])
    for key in ("L", "W", "Vinf"):
        if key not in data:
            diags.append({"where": key, "message": "missing field"})
    if diags:
        raise ProblemError(diags)
    L = _parse_op(data["L"], "L", text, diags)
    U = _parse_op(data["U"], "U", text, diags) if data.get("U") is not None else None
    bases = {}
    for key in ("W", "Vinf"):
        lst = data[key]
        if not isinstance(lst, list) or not lst:
            diags.append({"where": key, "message": "basis list is empty"})
            continue
        bases[key] = [_parse_op(w, "%s[%d]" % (key, i), text, diags) for i, w in enumerate(lst)]
    f = _parse_op(data["f"], "f", text, diags) if "f" in data else None
    if diags:
        raise ProblemError(diags)
    return ProblemFile(L, U, bases["W"], bases["Vinf"], f,
                       name=str(data.get("name", "")), notes=str(data.get("notes", "")))


def parse_problem(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError([{"where": "<json>", "message": exc.msg,
                             "line": exc.lineno, "column": exc.colno}]) from None
    return problem_from_dict(data, text)


def serialize(pf):
    return json.dumps(pf.to_dict(), indent=2) + "\n"


def fixture_path(name):
    return str(resources.files("fuchsct") / "fixtures" / (name + ".json"))


def load_problem(path):
    """Read a problem file; bare fixture names resolve to the bundled fixtures."""
    if not os.path.exists(path) and path in FIXTURES:
        path = fixture_path(path)
    with open(path) as fh:
        return parse_problem(fh.read())


__all__ = ["ProblemFile", "Problem", "ProblemError", "parse_problem", "problem_from_dict",
           "serialize", "load_problem", "fixture_path", "FIXTURES"]
