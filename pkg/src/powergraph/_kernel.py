"""Backend selection for the decomposition kernel.

Prefers the compiled extension, falls back to the pure-Python twin, and
honours POWERGRAPH_PURE=1 to force the fallback (used by the parity tests
and the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("POWERGRAPH_PURE"):
    from . import _pykernel as _impl
else:
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pykernel as _impl  # type: ignore[no-redef]

decompose = _impl.decompose
BACKEND: str = _impl.NAME
