"""Backend selection for the hot search kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` module. Set ``BICAY_PURE_PYTHON=1`` to force the
fallback.
"""
from __future__ import annotations

import os

from bicayley import _kernels_py

if os.environ.get("BICAY_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from bicayley import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

bfs_row = _impl.bfs_row
all_pairs = _impl.all_pairs
girth = _impl.girth
max_clique = _impl.max_clique
k_color = _impl.k_color


def backends():
    """All importable kernel modules, keyed by backend name."""
    out = {"python": _kernels_py}
    try:
        from bicayley import _ckernels
        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
