"""Select the compiled kernels when available, else the pure-Python ones.

Set ``MAXTB_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("MAXTB_PURE_PYTHON"):
    from ._kernel_py import *  # noqa: F401,F403
else:
    try:
        from ._kernel import *  # noqa: F401,F403
    except ImportError:
        from ._kernel_py import *  # noqa: F401,F403

from . import _kernel_py as python  # noqa: E402

__all__ = [
    "BACKEND",
    "padd",
    "pmul",
    "pshift",
    "delta_power",
    "smooth",
    "switch",
    "components",
    "restrict",
    "find_kink",
    "descend",
    "canonical_code",
    "dubrovnik_regular",
    "ruling_masks",
    "check_mask",
    "python",
]
