"""Backend selection for the scan kernels.

The compiled extension is used when it was built; set
``TWISTWARP_PURE_PYTHON=1`` to force the Python fallback.
"""

import os

from . import _kernels_py

BAR, OVER, UNDER = _kernels_py.BAR, _kernels_py.OVER, _kernels_py.UNDER

if os.environ.get("TWISTWARP_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

warping_degrees = _impl.warping_degrees
arc_bar_parities = _impl.arc_bar_parities
