"""Select the compiled kernels when available, else the pure-Python ones.

Set ``CONFORMALK_PURE=1`` to force the Python implementation.
"""

import os

_impl = None
if not os.environ.get("CONFORMALK_PURE"):
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = None
if _impl is None:
    from . import _kernels_py as _impl

from . import _kernels_py as python_kernels

IMPLEMENTATION = _impl.IMPLEMENTATION
popcount = _impl.popcount
mono_mul_sign = _impl.mono_mul_sign
derive_sign = _impl.derive_sign
reduce_row = _impl.reduce_row
echelon = _impl.echelon

__all__ = ["IMPLEMENTATION", "popcount", "mono_mul_sign", "derive_sign",
           "reduce_row", "echelon", "python_kernels"]
