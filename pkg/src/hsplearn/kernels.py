"""Backend dispatch for the computational kernels.

The compiled extension is preferred when present; setting the environment
variable ``HSPLEARN_PURE=1`` before import forces the pure NumPy fallback.
``BACKEND`` names the selection ("compiled" or "pure").  Both backends
implement the same four functions with identical semantics:

- ``closure_from_generators(factors, generators)``
- ``closure_contains(factors, base, extra, target)``
- ``extension_check(factors, base, extra, min_size)``
- ``mixed_radix_qft(amps, factors, inverse=False)``
"""

from __future__ import annotations

import os

from . import _kernels_py

__all__ = [
    "BACKEND",
    "closure_from_generators",
    "closure_contains",
    "extension_check",
    "mixed_radix_qft",
]

BACKEND = "pure"
_impl = _kernels_py

if os.environ.get("HSPLEARN_PURE", "") != "1":
    try:
        from . import _kernels as _compiled

        _impl = _compiled
        BACKEND = "compiled"
    except ImportError:
        pass

closure_from_generators = _impl.closure_from_generators
closure_contains = _impl.closure_contains
extension_check = _impl.extension_check
mixed_radix_qft = _impl.mixed_radix_qft
