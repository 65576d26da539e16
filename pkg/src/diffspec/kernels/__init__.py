"""Hot kernels with a compiled backend and a numpy fallback.

The Cython extension ``_ckernels`` is used when it imports; otherwise, or
when ``DIFFSPEC_PURE=1`` is set, the numpy module ``_pykernels`` is used.
Both expose ``derivative_logs``, ``derivative_log_counts`` and
``exponent_deltas`` with identical results.
"""

import importlib
import os

from . import _pykernels


def load_backend(name):
    if name == "python":
        return _pykernels
    if name == "cython":
        return importlib.import_module(f"{__name__}._ckernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    names = ["python"]
    try:
        load_backend("cython")
        names.insert(0, "cython")
    except ImportError:
        pass
    return names


if os.environ.get("DIFFSPEC_PURE", "") not in ("", "0"):
    BACKEND = "python"
else:
    BACKEND = available_backends()[0]

_impl = load_backend(BACKEND)
derivative_logs = _impl.derivative_logs
derivative_log_counts = _impl.derivative_log_counts
exponent_deltas = _impl.exponent_deltas
