"""Select the sparse polynomial kernel backend.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used.  Setting ``TRACERING_PURE=1``
forces the fallback.
"""

import os

if os.environ.get("TRACERING_PURE") == "1":
    from . import _pykernels as backend
else:
    try:
        from . import _ckernels as backend
    except ImportError:
        from . import _pykernels as backend

BACKEND = "compiled" if backend.__name__.endswith("_ckernels") else "python"

SHIFT = 20
MAX_EXPONENT = (1 << SHIFT) - 1

add = backend.add
sub = backend.sub
scale = backend.scale
mul = backend.mul
mul_sub = backend.mul_sub
evaluate = backend.evaluate
