"""Kernel selection.

The compiled kernels are used when importable; setting the environment
variable ``LOCALFRAC_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

from __future__ import annotations

import logging
import os

logger = logging.getLogger(__name__)

if os.environ.get("LOCALFRAC_PURE_PYTHON", "") not in ("", "0"):
    from localfrac import _pykernels as kernels
else:
    try:
        from localfrac import _ckernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        logger.debug("compiled kernels unavailable, using pure Python")
        from localfrac import _pykernels as kernels

BACKEND: str = kernels.NAME


def available_kernels() -> dict[str, object]:
    """Every importable kernel module keyed by backend name."""
    from localfrac import _pykernels

    found: dict[str, object] = {"python": _pykernels}
    try:
        from localfrac import _ckernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
