"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over.  ``ASMPOSET_PURE=1`` forces the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("ASMPOSET_PURE") != "1":
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels


def backends():
    """Map of every importable backend name to its module."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
        out["cython"] = _ckernels
    except ImportError:
        pass
    return out


up_cover_masks = _impl.up_cover_masks
down_cover_masks = _impl.down_cover_masks
count_chains = _impl.count_chains
chain_masks = _impl.chain_masks
