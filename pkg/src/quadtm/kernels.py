"""Selects the fast compiled kernels when available.

Set the environment variable ``TM_PURE=1`` to force the pure-Python
fallback (useful for benchmarking and for debugging the extension).
"""

import os

from . import _pure

if os.environ.get("TM_PURE"):
    _impl = _pure
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

ACTIVE = _impl.IMPL

run_encoded = _impl.run_encoded
code_bits_valid = _impl.code_bits_valid
scan_valid_codes = _impl.scan_valid_codes
reach_accepts = _impl.reach_accepts
