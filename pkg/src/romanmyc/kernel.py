"""Backend selection for the search kernels.

The compiled extension is used when it imported successfully and the graph
fits in one 64-bit word; everything else runs on the pure-Python kernels.
Set ``ROMANMYC_BACKEND=python`` to force the fallback.
"""

from __future__ import annotations

import logging
import os

from . import _kernel_py

log = logging.getLogger(__name__)

SolverTimeout = _kernel_py.SolverTimeout

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None
    log.debug("compiled kernel not available, using pure Python")

BACKENDS = {"python": _kernel_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

DEFAULT = "python" if os.environ.get("ROMANMYC_BACKEND") == "python" or _compiled is None else "compiled"


def backend_for(n: int, name: str | None = None):
    """Kernel module for an ``n``-vertex graph; returns ``(name, module)``."""
    name = name or DEFAULT
    if name not in BACKENDS:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(BACKENDS)}")
    if name == "compiled" and n > _compiled.MAX_N:
        name = "python"
    return name, BACKENDS[name]
