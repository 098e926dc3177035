"""Pick the compiled kernels when available, else the numpy fallback."""

import os

from qske import _pykernels

BACKEND = "python"
kernels = _pykernels

if os.environ.get("QSKE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from qske import _ckernels
    except ImportError:
        pass
    else:
        kernels = _ckernels
        BACKEND = "cython"

hermitian_eigvalsh = kernels.hermitian_eigvalsh
apply_gate = kernels.apply_gate
