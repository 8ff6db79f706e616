"""Hot-kernel dispatch: the compiled extension when it was built, otherwise pure Python."""

from mixedbraids import _pykernels
from mixedbraids._pykernels import StepBudgetExceeded

try:
    from mixedbraids import _ckernels as _backend

    BACKEND = "cython"
except ImportError:  # extension not built
    _backend = _pykernels
    BACKEND = "python"

normal_form = _backend.normal_form
crossing_sums = _backend.crossing_sums

BACKENDS = {"python": _pykernels}
if BACKEND == "cython":
    BACKENDS["cython"] = _backend

__all__ = ["BACKEND", "BACKENDS", "StepBudgetExceeded", "crossing_sums", "normal_form"]
