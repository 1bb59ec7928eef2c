"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``BENIGN_FORCE_PURE=1`` to skip the extension (used by the benchmark and
by tests that compare the two implementations).
"""

import os

from benign import _purewords

if os.environ.get("BENIGN_FORCE_PURE"):
    _impl = _purewords
    BACKEND = "pure"
else:
    try:
        from benign import _fastwords as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _purewords
        BACKEND = "pure"

free_reduce = _impl.free_reduce
invert = _impl.invert
concat_reduce = _impl.concat_reduce
concat_reduce_many = _impl.concat_reduce_many
conjugate = _impl.conjugate
power = _impl.power
