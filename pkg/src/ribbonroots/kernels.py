"""Backend selection for the enumeration kernels.

The compiled extension is used when it imports; setting the environment
variable ``RIBBONROOTS_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

from . import _pykernels

python_backend = _pykernels

if os.environ.get("RIBBONROOTS_PURE_PYTHON", "") not in ("", "0"):
    compiled_backend = None
else:
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

descent_histogram = backend.descent_histogram
count_skew_syt = backend.count_skew_syt
enumerate_excited = backend.enumerate_excited
sqci_placements = backend.sqci_placements
sqci_weight = backend.sqci_weight

__all__ = [
    "BACKEND",
    "backend",
    "compiled_backend",
    "python_backend",
    "descent_histogram",
    "count_skew_syt",
    "enumerate_excited",
    "sqci_placements",
    "sqci_weight",
]
