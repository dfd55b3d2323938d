"""Backend selection for the integer polynomial kernels.

The compiled module is used when it imports; set ``FUCHSCT_PURE=1`` to force
the interpreted one.
"""

import os

from . import _pykernels

NAMES = (
    "u_add", "u_neg", "u_sub", "u_mul", "u_scale", "u_deriv", "u_content",
    "u_divexact_int", "u_primitive", "u_divexact", "u_prem", "u_eval", "u_gcd",
    "b_add", "b_neg", "b_sub", "b_mul", "b_scale", "b_scale_int", "b_deriv_x",
    "b_deriv_t", "b_content", "b_divexact_u", "b_divexact", "b_prem", "b_pdivrem", "b_gcd",
    "b_eval_t",
)

_impl = _pykernels
BACKEND = "python"
if not os.environ.get("FUCHSCT_PURE"):
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

for _n in NAMES:
    globals()[_n] = getattr(_impl, _n)
del _n
