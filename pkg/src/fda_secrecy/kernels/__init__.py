"""Hot Monte Carlo kernel with compiled/NumPy backend selection.

The per-trial work -- steering-vector phases, null-space projection and the
two inner products Eve needs -- dominates the toolkit's runtime, so it is
implemented twice: a Cython extension (built at install time) and a
vectorized NumPy fallback.  The extension is preferred when importable;
set ``FDA_SECRECY_BACKEND=numpy`` (or ``cython``) to force a choice.

Both backends consume identical pre-drawn random arrays and implement the
same arithmetic, so they agree to floating-point accumulation order
(relative ~1e-14); results are bit-identical across runs and thread counts
for a fixed backend.
"""

from __future__ import annotations

import os

from . import numpy_backend

_choice = os.environ.get("FDA_SECRECY_BACKEND", "auto").lower()
if _choice not in ("auto", "cython", "numpy"):
    raise RuntimeError(
        f"FDA_SECRECY_BACKEND={_choice!r} not recognized (use auto, cython or numpy)"
    )

if _choice == "numpy":
    _impl = numpy_backend
    BACKEND = "numpy"
else:
    try:
        from . import _cykernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        if _choice == "cython":
            raise
        _impl = numpy_backend
        BACKEND = "numpy"

rho_an_samples = _impl.rho_an_samples


def backend_name() -> str:
    return BACKEND
