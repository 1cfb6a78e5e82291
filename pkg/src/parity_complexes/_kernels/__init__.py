"""Hot kernels: compiled when the extension is built, pure Python otherwise.

Set ``PARITY_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_compiled = None

if os.environ.get("PARITY_PURE_PYTHON") != "1":
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None
    else:
        BACKEND = "cython"

bits = _pykernels.bits


def closure(succ, allowed):
    if _compiled is not None:
        return _compiled.closure(succ, allowed)
    return _pykernels.closure(succ, allowed)


def enumerate_cells(minus, plus, conflict):
    if _compiled is not None and len(minus) <= 64:
        return _compiled.enumerate_cells(minus, plus, conflict)
    return _pykernels.enumerate_cells(minus, plus, conflict)
