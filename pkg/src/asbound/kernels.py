"""Pick the search kernels: compiled extension if importable, numpy otherwise.

Set ``ASBOUND_PURE=1`` to force the numpy fallback.
"""

import os

import numpy as np

from . import _kernels_py

BACKEND = "python"
scan = _kernels_py.scan
gray_scan = _kernels_py.gray_scan

if os.environ.get("ASBOUND_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # pragma: no cover - depends on the build
        pass
    else:
        BACKEND = "compiled"
        scan = _compiled.scan
        gray_scan = _compiled.gray_scan


def table_dtype(p: int):
    """Narrowest unsigned dtype holding every F_p value."""
    if p <= 1 << 8:
        return np.uint8
    if p <= 1 << 16:
        return np.uint16
    return np.uint32


def get_backend(name=None):
    """Kernel module for ``name`` ('compiled' or 'python'); None means the default."""
    if name is None:
        name = BACKEND
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown kernel backend {name!r}")
