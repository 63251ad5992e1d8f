"""Backend selection for the hot loops.

The compiled extension is used when it was built and ``PLATMOVER_PURE`` is
unset; otherwise the pure-Python module serves the same functions.
"""

from __future__ import annotations

import os

from . import _kernels_py as python_backend

compiled_backend = None
if not os.environ.get("PLATMOVER_PURE"):
    try:
        from . import _kernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

_impl = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if _impl is compiled_backend else "python"

transport = _impl.transport
liftable = _impl.liftable
chain_matrix = _impl.chain_matrix
lift_free_word = _impl.lift_free_word
