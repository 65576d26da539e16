"""numpy implementation of the hot loops; used when the extension is absent.

All kernels work in the log domain of a table-backed field.  ``zech`` has
length ``o = q - 1`` with ``zech[m] = log(1 + alpha^m)`` (``-1`` at
``m = h = o/2``).  A derivative value is reported by its log, with ``o``
standing for zero.  ``d`` must already be reduced modulo ``o``.
"""

import numpy as np


def derivative_logs(zech, d, logs):
    """log of (x+1)^d - x^d for x = alpha^L, L in ``logs`` (none equal to h)."""
    o = len(zech)
    h = o // 2
    L = np.asarray(logs, dtype=np.int64)
    a = (d * zech[L]) % o
    b = (d * L) % o
    r = (b + h + zech[(a - b + h) % o]) % o
    r[a == b] = o
    return r


def derivative_log_counts(zech, d, lo, hi, out):
    """Add the histogram of derivative logs over L in [lo, hi), skipping x = -1."""
    o = len(zech)
    L = np.arange(lo, hi, dtype=np.int64)
    L = L[L != o // 2]
    out += np.bincount(derivative_logs(zech, d, L), minlength=o + 1)


def exponent_deltas(zech, ds, cap=-1):
    """Differential uniformity for every reduced exponent in ``ds``.

    With ``cap >= 0`` a value above ``cap`` is reported as ``cap + 1``.
    """
    o = len(zech)
    h = o // 2
    L = np.arange(o, dtype=np.int64)
    L = L[L != h]
    out = np.empty(len(ds), dtype=np.int64)
    for i, d in enumerate(ds):
        counts = np.bincount(derivative_logs(zech, int(d), L), minlength=o + 1)
        counts[0] += 1
        counts[h if d % 2 == 0 else 0] += 1
        out[i] = counts.max()
    if cap >= 0:
        np.minimum(out, cap + 1, out=out)
    return out
