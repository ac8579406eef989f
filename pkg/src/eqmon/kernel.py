"""Selects the enumeration kernel backend at import time.

The compiled extension (eqmon._kernel) is preferred; the pure-Python twin
(eqmon._kernel_py) is used when the extension is unavailable or when the
environment variable EQMON_PURE is set to a non-empty value.  Both expose the
same functions with identical enumeration order.
"""

import os

if os.environ.get("EQMON_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND
check_identity = _impl.check_identity
eval_subs_range = _impl.eval_subs_range
eval_under_subs = _impl.eval_under_subs
enumerate_matches = _impl.enumerate_matches


def backend_name() -> str:
    return BACKEND
