"""Select the kernel implementation at import time.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module. Set ``BINHOPF_PURE_PYTHON=1`` to force the
fallback.
"""
import os

from binhopf import _pykernels

if os.environ.get("BINHOPF_PURE_PYTHON", "") not in ("", "0"):
    kernels = _pykernels
else:
    try:
        from binhopf import _ckernels as kernels
    except ImportError:
        kernels = _pykernels

BACKEND = "python" if kernels is _pykernels else "cython"
