"""Compare the compiled and interpreted polynomial kernels.

Micro benchmarks call both modules directly on the same random inputs; the
end-to-end rows run the telescoping fixtures in a subprocess per backend
(FUCHSCT_PURE=1 selects the interpreted one).

    python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from fuchsct.algebra import _pykernels

try:
    from fuchsct.algebra import _ckernels
except ImportError:
    _ckernels = None


def rand_u(rng, deg, bits=20):
    c = [rng.randint(-2 ** bits, 2 ** bits) for _ in range(deg + 1)]
    c[-1] = c[-1] or 1
    return tuple(c)


def rand_b(rng, dx, dt):
    return tuple(rand_u(rng, rng.randint(0, dt), 8) for _ in range(dx)) + (rand_u(rng, dt, 8),)


def cases(rng):
    a, b, g = rand_u(rng, 30), rand_u(rng, 30), rand_u(rng, 10)
    A, B, G = rand_b(rng, 6, 4), rand_b(rng, 6, 4), rand_b(rng, 3, 2)
    return [
        ("u_mul deg 30", "u_mul", (a, b)),
        ("u_gcd deg 40", "u_gcd", (_pykernels.u_mul(a, g), _pykernels.u_mul(b, g))),
        ("b_mul 6x4", "b_mul", (A, B)),
        ("b_gcd 9x6", "b_gcd", (_pykernels.b_mul(A, G), _pykernels.b_mul(B, G))),
        ("b_pdivrem 12/6", "b_pdivrem", (_pykernels.b_mul(A, B), A)),
    ]


E2E = r"""
import time
from fuchsct.io import load_problem
from fuchsct.algebra.kernels import BACKEND
from fuchsct.telescope import telescope_polyred
t0 = time.perf_counter()
for name in ("telescoping", "elliptic_moved"):
    p = load_problem(name).build()
    telescope_polyred(p.f, p.Wn, p.V)
print(BACKEND, time.perf_counter() - t0)
"""


def end_to_end(pure):
    env = dict(os.environ)
    env.pop("FUCHSCT_PURE", None)
    if pure:
        env["FUCHSCT_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print("%-18s %12s %12s %8s" % ("kernel", "python us", "cython us", "speedup"))
    for label, name, argv in cases(rng):
        py = getattr(_pykernels, name)
        tp = min(timeit.repeat(lambda: py(*argv), number=args.repeat, repeat=3)) / args.repeat
        if _ckernels is None:
            print("%-18s %12.1f %12s %8s" % (label, tp * 1e6, "n/a", "-"))
            continue
        cy = getattr(_ckernels, name)
        assert cy(*argv) == py(*argv), name
        tc = min(timeit.repeat(lambda: cy(*argv), number=args.repeat, repeat=3)) / args.repeat
        print("%-18s %12.1f %12.1f %7.1fx" % (label, tp * 1e6, tc * 1e6, tp / tc))
    times = dict(end_to_end(p) for p in (True, False))
    print()
    for k, v in times.items():
        print("end-to-end telescoping (%s): %.3f s" % (k, v))


if __name__ == "__main__":
    main()
