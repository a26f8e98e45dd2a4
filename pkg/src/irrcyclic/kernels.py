"""Backend selection for the hot enumeration kernel.

The compiled extension is optional; importing it can fail on installs without
a C toolchain, in which case the numpy fallback is used transparently.
"""

from __future__ import annotations

import numpy as np

from . import _orbit_py

try:
    from . import _orbit as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def alpha_orbit(p: int, d: int, mult, count: int, *, backend: str | None = None) -> np.ndarray:
    """Encodings of alpha^0 .. alpha^(count-1); see _orbit_py.alpha_orbit."""
    chosen = backend or BACKEND
    if chosen == "compiled":
        if _compiled is None:
            raise ValueError("compiled kernel not available")
        return _compiled.alpha_orbit(p, d, mult, count)
    if chosen != "python":
        raise ValueError(f"unknown backend {chosen!r}")
    return _orbit_py.alpha_orbit(p, d, mult, count)
