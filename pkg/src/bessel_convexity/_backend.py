"""Kernel backend selection.

The compiled extension is preferred; ``BESSEL_CONVEXITY_PURE=1`` forces the
pure-Python kernels (used by the benchmark and the cross-backend tests).
"""
import os

from . import _pykernels

kernels = _pykernels

if not os.environ.get("BESSEL_CONVEXITY_PURE"):
    try:
        from . import _ckernels as kernels  # noqa: F811
    except ImportError:
        kernels = _pykernels

BACKEND = kernels.BACKEND
