"""Backend selection for the sector-scan kernels.

Prefers the compiled extension (tclab._scan); falls back to the
vectorized numpy implementation. Both implement the same bisection, so
results are interchangeable. Override with TCLAB_BACKEND=pure|compiled.
"""

from __future__ import annotations

import os

_requested = os.environ.get("TCLAB_BACKEND", "").strip().lower()

if _requested == "pure":
    from . import _scan_py as _impl

    BACKEND = "pure"
elif _requested in ("", "compiled"):
    try:
        from . import _scan as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise ImportError(
                "TCLAB_BACKEND=compiled but the tclab._scan extension is not built; "
                "reinstall with the Cython toolchain or unset TCLAB_BACKEND"
            ) from None
        from . import _scan_py as _impl

        BACKEND = "pure"
else:
    raise ValueError(f"unknown TCLAB_BACKEND={_requested!r} (use 'pure' or 'compiled')")

scan_lowest = _impl.scan_lowest
lowest_value = _impl.lowest_value


def backend_name() -> str:
    """Which kernel implementation this process selected at import."""
    return BACKEND
