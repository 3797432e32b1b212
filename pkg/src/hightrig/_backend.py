"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
kernels are used.  Setting ``HIGHTRIG_BACKEND=python`` forces the fallback.
"""
import os

from . import _pykernels

_forced = os.environ.get("HIGHTRIG_BACKEND", "").strip().lower()

kernels = _pykernels
if _forced != "python":
    try:
        from . import _ckernels as kernels
    except ImportError:
        if _forced == "cython":
            raise
        kernels = _pykernels

BACKEND = kernels.BACKEND


def available_backends():
    """Return the kernel modules that can be imported, keyed by name."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
