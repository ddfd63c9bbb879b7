"""Pick the compiled kernels and big-integer type at import time.

Setting OUTFN_EULER_PURE=1 forces the pure-Python kernels and plain ints.
"""
from __future__ import annotations

import os
from math import gcd as _int_gcd

PURE = os.environ.get("OUTFN_EULER_PURE", "") not in ("", "0")

kernels = None
if not PURE:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = None
if kernels is None:
    from . import _pykernels as kernels

COMPILED = kernels.__name__.endswith("._kernels")

bigint = int
bigcd = _int_gcd
if not PURE:
    try:
        from gmpy2 import gcd as bigcd, mpz as bigint
    except ImportError:
        pass

GMP = bigint is not int


def describe() -> str:
    return f"kernels={'cython' if COMPILED else 'python'} bigint={'gmpy2' if GMP else 'int'}"
