"""Hot Henkin kernels: the compiled extension when it is built, otherwise
the pure-Python reference.  Set ``SOLND_PURE_PYTHON=1`` to force the
fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py as python_impl

compiled_impl = None
if not os.environ.get("SOLND_PURE_PYTHON"):
    try:
        from . import _speedups as compiled_impl  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        compiled_impl = None

_impl = compiled_impl or python_impl
IMPLEMENTATION = _impl.IMPLEMENTATION

henkin_functions = _impl.henkin_functions
henkin_relations = _impl.henkin_relations
linear_first = _impl.linear_first
linear_second = _impl.linear_second
separator_search = _impl.separator_search
henkin_table = _impl.henkin_table
