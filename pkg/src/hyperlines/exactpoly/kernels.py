"""Backend selection for the polynomial multiplication kernel.

The compiled kernel is used when the extension was built; otherwise the
pure-Python one. Both compute identical term maps.
"""
from contextlib import contextmanager

from hyperlines.exactpoly import _pykernel

try:
    from hyperlines.exactpoly import _ckernel
except ImportError:  # extension not built
    _ckernel = None

AVAILABLE = {"python": _pykernel.mul_terms}
if _ckernel is not None:
    AVAILABLE["cython"] = _ckernel.mul_terms

BACKEND = "cython" if _ckernel is not None else "python"
mul_terms = AVAILABLE[BACKEND]


def set_backend(name):
    """Switch the active kernel; returns the name of the previous one."""
    global BACKEND, mul_terms
    if name not in AVAILABLE:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(AVAILABLE)}")
    previous = BACKEND
    BACKEND = name
    mul_terms = AVAILABLE[name]
    return previous


@contextmanager
def using_backend(name):
    previous = set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)
