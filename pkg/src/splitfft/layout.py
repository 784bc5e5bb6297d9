"""Signal containers and the pairwise bit-reversal permutation.

Two layouts are used throughout the package:

* ``SplitSignal`` keeps the real and imaginary channels as two separate
  float64 vectors of equal length.
* ``InterleavedBuffer`` holds the same samples as one float64 vector of
  length ``2 * n`` laid out ``[re0, im0, re1, im1, ...]``.  All transform
  kernels operate on this layout, moving each (re, im) pair as a unit.
"""

from dataclasses import dataclass

import numpy as np


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


@dataclass
class SplitSignal:
    """A complex signal stored as two separate real channels."""

    re: np.ndarray
    im: np.ndarray

    def __post_init__(self):
        self.re = np.ascontiguousarray(self.re, dtype=np.float64)
        self.im = np.ascontiguousarray(self.im, dtype=np.float64)
        if self.re.ndim != 1 or self.im.ndim != 1:
            raise ValueError("signal channels must be one-dimensional")
        if self.re.size != self.im.size:
            raise ValueError(
                f"channel lengths differ: re has {self.re.size} samples, "
                f"im has {self.im.size}"
            )

    def __len__(self) -> int:
        return self.re.size

    def copy(self) -> "SplitSignal":
        return SplitSignal(self.re.copy(), self.im.copy())


@dataclass
class InterleavedBuffer:
    """``2**(m+1)`` float64 values holding ``2**m`` interleaved (re, im) pairs."""

    data: np.ndarray
    m: int

    def __post_init__(self):
        self.data = np.ascontiguousarray(self.data, dtype=np.float64)
        if self.data.ndim != 1:
            raise ValueError("buffer data must be one-dimensional")
        if self.m < 0:
            raise ValueError(f"stage count m must be >= 0, got {self.m}")
        expected = 2 << self.m
        if self.data.size != expected:
            raise ValueError(
                f"buffer length {self.data.size} does not match m={self.m} "
                f"(expected {expected})"
            )

    @classmethod
    def from_data(cls, data) -> "InterleavedBuffer":
        """Wrap an interleaved vector, inferring ``m`` from its length."""
        data = np.ascontiguousarray(data, dtype=np.float64)
        if data.ndim != 1 or data.size % 2:
            raise ValueError("interleaved data must be a flat vector of even length")
        n = data.size // 2
        if not is_power_of_two(n):
            raise ValueError(f"pair count {n} is not a power of two")
        return cls(data, n.bit_length() - 1)

    @property
    def sample_count(self) -> int:
        return 1 << self.m

    def pairs(self) -> np.ndarray:
        """View the buffer as ``2**m`` complex128 values (shares memory)."""
        return self.data.view(np.complex128)

    def copy(self) -> "InterleavedBuffer":
        return InterleavedBuffer(self.data.copy(), self.m)


def interleave(signal: SplitSignal) -> InterleavedBuffer:
    """Pack a split signal into a fresh interleaved buffer.

    The sample count must be a power of two so the result can feed the
    radix-2 transform kernels.
    """
    n = len(signal)
    if not is_power_of_two(n):
        raise ValueError(f"sample count {n} is not a power of two")
    data = np.empty(2 * n, dtype=np.float64)
    data[0::2] = signal.re
    data[1::2] = signal.im
    return InterleavedBuffer(data, n.bit_length() - 1)


def deinterleave(buf: InterleavedBuffer) -> SplitSignal:
    """Unpack an interleaved buffer back into separate channels."""
    return SplitSignal(buf.data[0::2].copy(), buf.data[1::2].copy())


def bit_reverse_index(k: int, m: int) -> int:
    """Reverse the low ``m`` bits of ``k``."""
    if m < 0:
        raise ValueError(f"bit width must be >= 0, got {m}")
    if not 0 <= k < (1 << m):
        raise ValueError(f"index {k} out of range for {m} bits")
    r = 0
    for _ in range(m):
        r = (r << 1) | (k & 1)
        k >>= 1
    return r


def bit_reverse_indices(m: int) -> np.ndarray:
    """All of ``bit_reverse_index(k, m)`` for k = 0 .. 2**m - 1, as one array.

    Built by the doubling recurrence: the table for m bits is the table for
    m-1 bits with a 0 appended to each entry, followed by the same with a 1.
    """
    if m < 0:
        raise ValueError(f"bit width must be >= 0, got {m}")
    idx = np.zeros(1, dtype=np.intp)
    for _ in range(m):
        idx = np.concatenate([2 * idx, 2 * idx + 1])
    return idx


def permute_pairwise_bitrev(buf: InterleavedBuffer) -> InterleavedBuffer:
    """Reorder pairs so pair k of the result is pair bit_reverse(k) of the input.

    Each (re, im) pair moves as a unit; the two values are never split.
    Returns a new buffer.
    """
    idx = bit_reverse_indices(buf.m)
    data = buf.pairs()[idx].view(np.float64)
    return InterleavedBuffer(data, buf.m)
