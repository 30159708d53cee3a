"""Backend selection for the integer kernels.

The compiled extension is used when it was built; otherwise (or when
``TORICVGIT_PURE_PYTHON`` is set to a non-empty value) the pure-Python
implementations are used. Both return identical results.
"""
import os

from toricvgit import _pykernels

primitive = _pykernels.primitive

if os.environ.get("TORICVGIT_PURE_PYTHON"):
    _ext = None
else:
    try:
        from toricvgit import _ckernels as _ext
    except ImportError:  # extension not built
        _ext = None

if _ext is not None:
    BACKEND = "cython"
    int_rank = _ext.int_rank
    dd_cone = _ext.dd_cone
    lp_phase_one = _ext.lp_phase_one
else:
    BACKEND = "python"
    int_rank = _pykernels.int_rank
    dd_cone = _pykernels.dd_cone
    lp_phase_one = _pykernels.lp_phase_one

__all__ = ["BACKEND", "int_rank", "dd_cone", "lp_phase_one", "primitive"]
