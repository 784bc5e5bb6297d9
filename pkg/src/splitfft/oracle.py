"""Slow reference transforms used to check the fast kernels.

Two independent routes to the same answer:

* :func:`naive_dft` evaluates the DFT sum directly from locally built
  trig tables in O(N^2); it works for any length, not just powers of two.
* :func:`naive_real_matvec` multiplies the split signal by the dense
  2Nx2N embedding from :mod:`densealg`.

Agreement between the two (and between either and the fast kernels) is
what the test suite leans on.
"""

from functools import lru_cache

import numpy as np

from .densealg import dft_embedding_split
from .layout import SplitSignal


@lru_cache(maxsize=2)
def _trig_tables(n: int):
    # kept deliberately separate from densealg's snapped builders
    k = np.arange(n, dtype=np.intp)
    angle = 2.0 * np.pi * (np.outer(k, k) % n) / float(n)
    c = np.cos(angle)
    s = np.sin(angle)
    c.flags.writeable = False
    s.flags.writeable = False
    return c, s


def naive_dft(signal: SplitSignal) -> SplitSignal:
    """Direct O(N^2) DFT of a split signal; any length N >= 1.

    Returns y_k = sum_l x_l exp(-2j pi k l / N) as a new split signal.
    """
    n = len(signal)
    if n < 1:
        raise ValueError("cannot transform an empty signal")
    c, s = _trig_tables(n)
    re = c @ signal.re + s @ signal.im
    im = c @ signal.im - s @ signal.re
    return SplitSignal(re, im)


def naive_real_matvec(signal: SplitSignal) -> SplitSignal:
    """DFT of a split signal via the dense real embedding matrix."""
    n = len(signal)
    if n < 1:
        raise ValueError("cannot transform an empty signal")
    stacked = np.concatenate([signal.re, signal.im])
    out = dft_embedding_split(n) @ stacked
    return SplitSignal(out[:n], out[n:])
