"""Command line driver; every subcommand prints one JSON document."""

import argparse
import json
import sys

from .algebra.parse import format_polyx, format_ratx
from .basisframe import FrameError
from .hermite import HermiteError, hermite_reduce, is_integrable, reduce_mod_U
from .io import ProblemError, load_problem
from .polyred import PhiContext, additive_decompose
from .telescope import (DoubleRootError, TelescopeError, VerificationError,
                        check_double_root_infinity, require_double_root,
                        telescope_canonical,
                        telescope_polyred, verify_telescoper)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


def _coords(c):
    return [format_ratx(v) for v in c]


def _op(P):
    return [format_ratx(c) for c in P.coeffs] or ["0"]


def _elem(a):
    cs = list(a.coords)
    while len(cs) > 1 and not cs[-1]:
        cs.pop()
    return [format_ratx(c) for c in cs]


def _polys(ps):
    return [format_polyx(p) for p in ps]


def cmd_check(prob, args):
    W = prob.W
    out = {"name": prob.file.name, "valid": True, "order": W.n, "e": format_polyx(W.e),
           "e_squarefree": W.e_squarefree(),
           "normal_at_infinity": prob.norm_info["iterations"] == 0,
           "tau": prob.tau, "t_action": prob.module.U is not None,
           "double_root_at_infinity": check_double_root_infinity(prob.f, prob.V)}
    return out


def cmd_diffmatrix(prob, args):
    W = prob.W
    out = {"e": format_polyx(W.e), "M": [_polys(r) for r in W.M]}
    if prob.module.U is not None:
        out["tM"] = [_polys(r) for r in W.tM]
    return out


def cmd_normalize(prob, args):
    V = prob.V
    return {"tau": prob.tau, "iterations": prob.norm_info["iterations"],
            "tau_sums": prob.norm_info["sums"], "bound": prob.norm_info["bound"],
            "W": [_elem(w) for w in prob.Wn.elements],
            "e": format_polyx(prob.Wn.e), "M": [_polys(r) for r in prob.Wn.M],
            "lambda": V.lam, "delta": V.delta, "deg_B": V.deg_B(),
            "B": [_polys(r) for r in V.B]}


def cmd_hermite(prob, args):
    hf = hermite_reduce(prob.Wn.coords(prob.f), prob.Wn)
    return {"g": _coords(hf.g), "h": _coords(hf.h), "h_numerators": _polys(hf.h_num),
            "h_denominator": format_polyx(hf.D), "d": format_polyx(hf.d)}


def _ctx(prob, args):
    return PhiContext(prob.V, seed=args.seed)


def cmd_decompose(prob, args):
    c = prob.Wn.coords(prob.f)
    if args.method == "canonical":
        hf = hermite_reduce(c, prob.Wn)
        red = reduce_mod_U(hf, prob.vspace)
        return {"method": "canonical", "g": _coords(red.g), "d": format_polyx(red.d),
                "R": _polys(red.R), "S": _polys(red.S), "zero": red.is_zero()}
    ctx = _ctx(prob, args)
    dec = additive_decompose(c, prob.Wn, prob.V, ctx)
    return {"method": "polyred", "g": _coords(dec.g), "d": format_polyx(dec.d),
            "R": _polys(dec.R), "Q": _coords(dec.Q.to_ratx()),
            "Q_over_denominator": _coords(dec.q_coords()), "lambda": ctx.lam, "ell": ctx.ell,
            "dim_NV": ctx.dim_nv(), "zero": dec.is_zero()}


def cmd_integrable(prob, args):
    c = prob.Wn.coords(prob.f)
    if args.method == "canonical":
        require_double_root(prob.f, prob.V)
        ok, G = is_integrable(c, prob.Wn, prob.vspace)
    else:
        dec = additive_decompose(c, prob.Wn, prob.V, _ctx(prob, args))
        ok = dec.is_zero()
        G = dec.g if ok else None
    return {"method": args.method, "integrable": ok,
            "antiderivative": _coords(G) if ok else None}


def cmd_telescope(prob, args):
    kw = dict(max_order=args.max_order, incremental=args.incremental,
              certificate=args.certificate, seed=args.seed)
    if args.method == "canonical":
        T = telescope_canonical(prob.f, prob.Wn, prob.V, prob.vspace, **kw)
    else:
        T = telescope_polyred(prob.f, prob.Wn, prob.V, **kw)
    verify_telescoper(T, prob.f, prob.Wn, prob.V, _ctx(prob, args))
    out = {"telescoper": T.strings(), "order": T.order, "method": T.method,
           "verified": T.verified}
    if T.method == "canonical":
        out["minimal_certified"] = T.minimal_certified
    if T.certificate is not None:
        out["certificate"] = _coords(T.certificate)
    return out


COMMANDS = {"check": cmd_check, "diffmatrix": cmd_diffmatrix, "normalize": cmd_normalize,
            "hermite": cmd_hermite, "decompose": cmd_decompose,
            "integrable": cmd_integrable, "telescope": cmd_telescope}


def build_parser():
    p = argparse.ArgumentParser(prog="fuchsct", description=__doc__)
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("problem", help="problem file (JSON) or bundled fixture name")
    p.add_argument("--method", choices=("canonical", "polyred"), default="polyred")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--certificate", action="store_true")
    p.add_argument("--incremental", action="store_true",
                   help="iterate on dt.[f] instead of dt^i f")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="compact single-line output")
    return p


def _emit(obj, compact):
    if compact:
        sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        prob = load_problem(args.problem).build()
    except ProblemError as exc:
        _emit({"error": "invalid problem", "diagnostics": exc.diagnostics}, args.json)
        return EXIT_INPUT
    except OSError as exc:
        _emit({"error": "cannot read problem", "message": str(exc)}, args.json)
        return EXIT_INPUT
    try:
        out = COMMANDS[args.command](prob, args)
    except DoubleRootError as exc:
        offer = exc.offer or {}
        _emit({"error": "precondition", "message": str(exc),
               "offer": {"a": offer.get("a"),
                         "L": _op(offer["L"]) if "L" in offer else None,
                         "U": _op(offer["U"]) if offer.get("U") is not None else None,
                         "f": _op(offer["f"]) if "f" in offer else None}}, args.json)
        return EXIT_PRECONDITION
    except (VerificationError, TelescopeError, HermiteError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, args.json)
        return EXIT_FAIL
    except (FrameError, ValueError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, args.json)
        return EXIT_INPUT
    _emit(out, args.json)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
