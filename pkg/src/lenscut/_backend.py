"""Pick the compiled kernels when available, numpy otherwise.

Set ``LENSCUT_BACKEND=python`` to force the numpy path.
"""

import os

from . import _fallback


def _load():
    if os.environ.get("LENSCUT_BACKEND", "").lower() == "python":
        return _fallback, "python"
    try:
        from . import _kernels
    except ImportError:
        return _fallback, "python"
    return _kernels, "cython"


kernels, backend_name = _load()


def get_kernels(name=None):
    """Kernel module by name ("cython" or "python"); None gives the active one."""
    if name is None:
        return kernels
    if name == "python":
        return _fallback
    if name == "cython":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend {name!r}")
