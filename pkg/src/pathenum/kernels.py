"""Kernel backend selection.

Imports the compiled coefficient-vector kernels when the extension module
built from _speedups.pyx is importable, otherwise the pure-Python versions.
Set PATHENUM_PURE=1 in the environment to force the pure-Python backend.
"""

import os

if os.environ.get("PATHENUM_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

vnorm = _impl.vnorm
vadd = _impl.vadd
vsub = _impl.vsub
vneg = _impl.vneg
vmul = _impl.vmul
vscale = _impl.vscale
veval = _impl.veval
vdivexact = _impl.vdivexact
vdivexact_int = _impl.vdivexact_int
