"""Kernel selection: compiled extension when available, pure fallback otherwise.

The environment variable RINGSPECTRA_KERNELS forces a lane: "c" requires the
compiled extension (ImportError if missing), "python" skips it.  Anything else
(or unset) picks the compiled lane when importable.
"""

import os

_forced = os.environ.get("RINGSPECTRA_KERNELS", "").strip().lower()

if _forced == "python":
    from . import _pykern as _impl
elif _forced == "c":
    from . import _ckern as _impl  # type: ignore[attr-defined]
else:
    try:
        from . import _ckern as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykern as _impl

BACKEND = _impl.BACKEND_NAME

assoc_witness = _impl.assoc_witness
distrib_witness = _impl.distrib_witness
charpoly_int = _impl.charpoly_int
scan_assoc_tensors = _impl.scan_assoc_tensors
