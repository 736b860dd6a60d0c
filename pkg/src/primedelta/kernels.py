"""Kernel backend selection.

Prefers the compiled extension when it imported cleanly, otherwise the
pure-Python fallback. Set PRIMEDELTA_KERNELS=pure or =compiled to force a
lane; forcing "compiled" raises if the extension is missing.
"""

import os

_forced = os.environ.get("PRIMEDELTA_KERNELS", "").strip().lower()

if _forced == "pure":
    from . import _pure as _impl
elif _forced == "compiled":
    from . import _kernels as _impl  # type: ignore[no-redef]
elif _forced:
    raise ImportError(
        f"PRIMEDELTA_KERNELS must be 'pure' or 'compiled', not {_forced!r}"
    )
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND

sieve_segment = _impl.sieve_segment
extract_primes = _impl.extract_primes
pair_scan = _impl.pair_scan
