"""Kernel backend selection.

The hot numerical kernels (finite-length Warburg evaluation and squared-error
accumulation) exist twice: a Cython extension (``_core``) and a pure numpy
fallback (``_pure``) with identical branch logic.  The compiled version is
preferred when importable; set ``SPMEIS_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("SPMEIS_PURE_PYTHON", "").strip() not in ("", "0"):
    from . import _pure as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as _impl

f_eval = _impl.f_eval
loss_spectrum = _impl.loss_spectrum
loss_grid = _impl.loss_grid
BACKEND = _impl.backend_name()


def backend_name() -> str:
    """Name of the active kernel backend: ``"compiled"`` or ``"python"``."""
    return BACKEND
