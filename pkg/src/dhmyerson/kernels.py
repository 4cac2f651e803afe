"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
implementations in ``_pykernels`` are used. Set ``DHMYERSON_PURE_PYTHON=1``
to force the fallback.
"""
import os

import numpy as np

from . import _pykernels

BACKEND = "python"

if os.environ.get("DHMYERSON_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels
    else:
        BACKEND = "compiled"
else:
    _impl = _pykernels

# Bound under which int64 accumulation in the compiled Shapley kernel is exact.
_INT64_SAFE = 1 << 62


def components(n, tails, heads, ground, weak=False):
    if n > 31:
        return _pykernels.components(n, tails, heads, ground, weak)
    return _impl.components(n, tails, heads, ground, weak)


def partition_table(n, tails, heads, weak=False):
    return _impl.partition_table(n, tails, heads, weak)


def restricted_values(n, tails, heads, weak, base, masks):
    return _impl.restricted_values(n, tails, heads, weak, base, masks)


def size_marginal_sums(table, n):
    if table.dtype == object:
        return _pykernels.size_marginal_sums(table, n)
    return _impl.size_marginal_sums(table, n)


def fits_int64(bound, n):
    """Whether ``2**n``-term sums of values bounded by ``bound`` stay in int64."""
    return bound * (1 << (n + 2)) < _INT64_SAFE


def int_table(values, n):
    """Pack Python ints into int64 when accumulation over ``2**n`` terms is safe.

    Falls back to an object array of Python ints otherwise.
    """
    if fits_int64(max((abs(v) for v in values), default=0), n):
        return np.array(values, dtype=np.int64)
    arr = np.empty(len(values), dtype=object)
    arr[:] = values
    return arr

