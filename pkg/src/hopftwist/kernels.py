"""Kernel selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or
when ``HOPFTWIST_PURE=1`` is set, the pure-Python kernels are used.  Both
expose ``matmul``, ``kron`` and ``BACKEND``.
"""
import os

from . import _pykernels

if os.environ.get("HOPFTWIST_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

matmul = _impl.matmul
kron = _impl.kron
BACKEND = _impl.BACKEND


def available():
    """Map backend name -> kernel module, for benchmarks and cross-checks."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found


def use(name):
    """Switch backend at runtime ("python" or "cython"); returns the previous name."""
    global matmul, kron, BACKEND
    impls = available()
    if name not in impls:
        raise ValueError(f"kernel backend {name!r} is not available (have {sorted(impls)})")
    prev = BACKEND
    matmul, kron, BACKEND = impls[name].matmul, impls[name].kron, impls[name].BACKEND
    return prev
