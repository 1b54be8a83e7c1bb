"""Kernel selection: compiled extension when available, pure Python otherwise.

Set QHACT_PURE=1 in the environment to force the pure-Python kernel even
when the compiled extension is built (used by the benchmark and the
parity tests).
"""

import os

if os.environ.get("QHACT_PURE"):
    from . import _cycore_py as impl
else:
    try:
        from . import _cycore as impl  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        from . import _cycore_py as impl  # type: ignore[no-redef]

BACKEND = impl.BACKEND
conv_reduce = impl.conv_reduce
add_scaled = impl.add_scaled
scale = impl.scale
content = impl.content
