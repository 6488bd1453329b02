"""Select the coefficient kernel backend at import time.

The compiled Cython module is preferred; the pure-Python twin is the
fallback.  Set RINGCODES_BACKEND=python (or =cython) to force a choice.
"""

import os


def _load():
    choice = os.environ.get("RINGCODES_BACKEND", "").strip().lower()
    if choice in ("py", "python", "pure"):
        from ringcodes import _kernels_py

        return _kernels_py
    if choice in ("c", "cy", "cython", "compiled"):
        from ringcodes import _kernels_cy

        return _kernels_cy
    try:
        from ringcodes import _kernels_cy

        return _kernels_cy
    except ImportError:
        from ringcodes import _kernels_py

        return _kernels_py


kernel = _load()
BACKEND = kernel.BACKEND
