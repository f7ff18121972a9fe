"""Kernel backend selection.

The compiled Cython module is preferred when it was built; otherwise the
pure Python implementation takes over transparently.  Setting the
environment variable ``BCKCODES_PURE`` to any non-empty value forces the
pure backend, which is handy for benchmarking and differential testing.
"""

import os

from . import pure

if os.environ.get("BCKCODES_PURE"):
    _impl = pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND_NAME: str = _impl.BACKEND_NAME
axiom_witnesses = _impl.axiom_witnesses
table_is_bck = _impl.table_is_bck
bck_candidates = _impl.bck_candidates
