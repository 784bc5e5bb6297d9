"""Radix-2 transform kernels over interleaved (re, im) buffers.

Both transform variants factor the length-``2**m`` DFT into ``m`` sparse
stages plus one pairwise bit-reversal permutation:

* decimation in time  (DIT): permute first, then for i = 1..m apply the
  stage-i rotations followed by the stage-i butterflies;
* decimation in frequency (DIF): for i = m..1 apply the stage-i
  butterflies followed by the stage-i rotations, then permute.

``butterfly_stage`` / ``twiddle_stage`` are the literal per-stage
operators (they match the dense factor matrices in ``densealg`` exactly).
``fft`` runs the same arithmetic through a fused executor: each stage is
three vector passes, the early stages run one contiguous cache-sized
segment at a time (stages with span below the segment size are
independent across segments), and the remaining wide stages are walked
two at a time in column slabs to cut memory traffic.  Per element the
executor performs the identical operations in the identical order as the
public per-stage operators, so results agree bitwise with the
stage-by-stage composition.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError
from .layout import InterleavedBuffer, bit_reverse_indices
from .twiddle import TwiddleTable, build_twiddle_table

MAX_PLAN_M = 30

# log2 of the pair count that fits a cache-friendly working set
_SEG_LOG = 14

# complex temporaries per column slab when walking two wide stages at once
_SLAB = 1 << 13


class Algorithm(enum.Enum):
    DIT = "dit"
    DIF = "dif"


@dataclass(frozen=True, eq=False)
class FftPlan:
    """Precomputed tables for transforms of one size.

    Plans are immutable and safe to share across threads; every
    transform call works on its own buffer and scratch space.
    """

    m: int
    algorithm: Algorithm
    twiddles: TwiddleTable
    bitrev: np.ndarray = field(repr=False)
    stage_factors: tuple = field(repr=False)

    @property
    def sample_count(self) -> int:
        return 1 << self.m


def make_plan(m: int, algorithm=Algorithm.DIT, *, max_m: int = MAX_PLAN_M) -> FftPlan:
    """Build an :class:`FftPlan` for ``2**m`` samples.

    ``algorithm`` may be an :class:`Algorithm` or one of the strings
    ``"dit"`` / ``"dif"``.  Raises :class:`CapacityError` when ``m``
    exceeds ``max_m``.
    """
    if m < 0:
        raise ValueError(f"stage count m must be >= 0, got {m}")
    if m > max_m:
        raise CapacityError(f"m={m} exceeds the plan limit max_m={max_m}")
    algorithm = Algorithm(algorithm) if not isinstance(algorithm, Algorithm) else algorithm
    table = build_twiddle_table(m)
    bitrev = bit_reverse_indices(m)
    bitrev.flags.writeable = False
    factors = []
    for st in table.stages:
        w = np.ascontiguousarray(st.cos - 1j * st.sin)
        w.flags.writeable = False
        factors.append(w)
    return FftPlan(m, algorithm, table, bitrev, tuple(factors))


def butterfly_stage(buf: InterleavedBuffer, i: int) -> None:
    """Apply the stage-``i`` butterflies in place.

    Within each block of ``2**i`` consecutive pairs, pair ``q`` and pair
    ``q + 2**(i-1)`` are replaced by their sum and difference.
    """
    if not 1 <= i <= buf.m:
        raise ValueError(f"stage index {i} out of range for m={buf.m}")
    v = buf.pairs().reshape(-1, 2, 1 << (i - 1))
    a = v[:, 0, :].copy()
    b = v[:, 1, :]
    # a is a copy, so writing the sum first cannot disturb the difference
    np.add(a, b, out=v[:, 0, :])
    np.subtract(a, b, out=v[:, 1, :])


def twiddle_stage(buf: InterleavedBuffer, plan: FftPlan, i: int) -> None:
    """Apply the stage-``i`` rotations in place.

    Within each block of ``2**i`` consecutive pairs the first half passes
    through unchanged and pair ``q`` of the second half is rotated by the
    stage-``i`` angle ``2*pi*q / 2**i``.
    """
    if buf.m != plan.m:
        raise ValueError(f"buffer is for m={buf.m} but plan is for m={plan.m}")
    if not 1 <= i <= plan.m:
        raise ValueError(f"stage index {i} out of range for m={plan.m}")
    if i == 1:
        return  # the single stage-1 rotation is the identity
    w = plan.stage_factors[i - 1]
    v = buf.pairs().reshape(-1, 2, w.size)
    # w[0] is 1; the slice keeps the identity column out of the multiply
    v[:, 1, 1:] *= w[1:]


def _butterfly_all(src: np.ndarray, dst: np.ndarray) -> None:
    # stage 1 on the complex view, src -> dst (R = 1, all rotations trivial)
    s = src.reshape(-1, 2)
    d = dst.reshape(-1, 2)
    np.add(s[:, 0], s[:, 1], out=d[:, 0])
    np.subtract(s[:, 0], s[:, 1], out=d[:, 1])


def _dit_stage(z: np.ndarray, w: np.ndarray, temp: np.ndarray) -> None:
    # rotate second halves, then butterfly, in three passes
    v = z.reshape(-1, 2, w.size)
    a = v[:, 0, :]
    b = v[:, 1, :]
    t = temp[: a.size].reshape(a.shape)
    np.multiply(b, w, out=t)
    np.subtract(a, t, out=b)
    np.add(a, t, out=a)


def _dif_stage(z: np.ndarray, w: np.ndarray, temp: np.ndarray) -> None:
    # butterfly, then rotate the difference halves
    v = z.reshape(-1, 2, w.size)
    a = v[:, 0, :]
    b = v[:, 1, :]
    t = temp[: a.size].reshape(a.shape)
    np.subtract(a, b, out=t)
    np.add(a, b, out=a)
    np.multiply(t, w, out=b)


def _slab_columns(v: np.ndarray, r: int):
    # column chunks sized so the slab temporaries stay cache-resident
    c = max(1, min(r, _SLAB // v.shape[0]))
    for c0 in range(0, r, c):
        yield c0, min(r, c0 + c)


def _dit_stage_pair(z: np.ndarray, w1: np.ndarray, w2: np.ndarray, temp: np.ndarray) -> None:
    # stages i and i+1 in one sweep; same per-element op order as two
    # _dit_stage calls, but each column slab is touched only once
    r = w1.size
    v = z.reshape(-1, 2, 2, r)
    w2v = w2.reshape(2, r)
    for c0, c1 in _slab_columns(v, r):
        a0 = v[:, 0, 0, c0:c1]
        b0 = v[:, 0, 1, c0:c1]
        a1 = v[:, 1, 0, c0:c1]
        b1 = v[:, 1, 1, c0:c1]
        t = temp[: a0.size].reshape(a0.shape)
        for a, b in ((a0, b0), (a1, b1)):
            np.multiply(b, w1[c0:c1], out=t)
            np.subtract(a, t, out=b)
            np.add(a, t, out=a)
        for h, (a, b) in enumerate(((a0, a1), (b0, b1))):
            np.multiply(b, w2v[h, c0:c1], out=t)
            np.subtract(a, t, out=b)
            np.add(a, t, out=a)


def _dif_stage_pair(z: np.ndarray, w1: np.ndarray, w2: np.ndarray, temp: np.ndarray) -> None:
    # stages i+1 and i in one sweep (descending order)
    r = w1.size
    v = z.reshape(-1, 2, 2, r)
    w2v = w2.reshape(2, r)
    for c0, c1 in _slab_columns(v, r):
        a0 = v[:, 0, 0, c0:c1]
        b0 = v[:, 0, 1, c0:c1]
        a1 = v[:, 1, 0, c0:c1]
        b1 = v[:, 1, 1, c0:c1]
        t = temp[: a0.size].reshape(a0.shape)
        for h, (a, b) in enumerate(((a0, a1), (b0, b1))):
            np.subtract(a, b, out=t)
            np.add(a, b, out=a)
            np.multiply(t, w2v[h, c0:c1], out=b)
        for a, b in ((a0, b0), (a1, b1)):
            np.subtract(a, b, out=t)
            np.add(a, b, out=a)
            np.multiply(t, w1[c0:c1], out=b)


def _check_pair(plan: FftPlan, buf: InterleavedBuffer) -> None:
    if buf.m != plan.m:
        raise ValueError(f"buffer is for m={buf.m} but plan is for m={plan.m}")


def fft_dit(plan: FftPlan, buf: InterleavedBuffer) -> InterleavedBuffer:
    """Forward transform, decimation in time.  Mutates ``buf`` in place."""
    _check_pair(plan, buf)
    m = plan.m
    if m == 0:
        return buf
    z = buf.pairs()
    n = z.size
    scratch = np.empty(n, dtype=np.complex128)
    np.take(z, plan.bitrev, out=scratch)
    _butterfly_all(scratch, z)
    k = min(m, _SEG_LOG)
    if k >= 2:
        temp = np.empty(1 << (k - 1), dtype=np.complex128)
        seg = 1 << k
        for s0 in range(0, n, seg):
            zs = z[s0 : s0 + seg]
            for i in range(2, k + 1):
                _dit_stage(zs, plan.stage_factors[i - 1], temp)
    slab = None
    i = k + 1
    while i <= m:
        if i < m:
            if slab is None:
                slab = np.empty(max(_SLAB, n >> (k + 2)), dtype=np.complex128)
            _dit_stage_pair(z, plan.stage_factors[i - 1], plan.stage_factors[i], slab)
            i += 2
        else:
            _dit_stage(z, plan.stage_factors[i - 1], scratch[: n >> 1])
            i += 1
    return buf


def fft_dif(plan: FftPlan, buf: InterleavedBuffer) -> InterleavedBuffer:
    """Forward transform, decimation in frequency.  Mutates ``buf`` in place."""
    _check_pair(plan, buf)
    m = plan.m
    if m == 0:
        return buf
    z = buf.pairs()
    n = z.size
    scratch = np.empty(n, dtype=np.complex128)
    k = min(m, _SEG_LOG)
    slab = None
    i = m
    while i > k:
        if i - 1 > k:
            if slab is None:
                slab = np.empty(max(_SLAB, n >> (k + 2)), dtype=np.complex128)
            _dif_stage_pair(z, plan.stage_factors[i - 2], plan.stage_factors[i - 1], slab)
            i -= 2
        else:
            _dif_stage(z, plan.stage_factors[i - 1], scratch[: n >> 1])
            i -= 1
    temp = np.empty(1 << (k - 1), dtype=np.complex128) if k >= 2 else None
    seg = 1 << k
    for s0 in range(0, n, seg):
        zs = z[s0 : s0 + seg]
        for i in range(k, 1, -1):
            _dif_stage(zs, plan.stage_factors[i - 1], temp)
        _butterfly_all(zs, scratch[s0 : s0 + seg])
    np.take(scratch, plan.bitrev, out=z)
    return buf


def fft(plan: FftPlan, buf: InterleavedBuffer) -> InterleavedBuffer:
    """Forward transform using the variant the plan was built for."""
    if plan.algorithm is Algorithm.DIF:
        return fft_dif(plan, buf)
    return fft_dit(plan, buf)


def _swap_channels(buf: InterleavedBuffer) -> None:
    re = buf.data[0::2].copy()
    buf.data[0::2] = buf.data[1::2]
    buf.data[1::2] = re


def ifft(plan: FftPlan, buf: InterleavedBuffer) -> InterleavedBuffer:
    """Inverse transform.  Mutates ``buf`` in place.

    Uses the channel-swap identity: swapping the re/im channels of every
    pair conjugates-and-rotates the signal, so a forward transform framed
    by two swaps and a 1/N scale inverts the DFT without a second kernel.
    """
    _check_pair(plan, buf)
    _swap_channels(buf)
    fft(plan, buf)
    _swap_channels(buf)
    buf.data *= 1.0 / buf.sample_count
    return buf


@dataclass(frozen=True)
class FlopReport:
    """Real-arithmetic census for one transform size."""

    real_mults: int
    real_adds: int
    generic_rotations: int
    quarter_turns: int
    identity_rotations: int


def count_flops(plan: FftPlan) -> FlopReport:
    """Count real operations and rotation kinds for ``plan``.

    Identity rotations cost nothing and a quarter turn is a swap/negate,
    so only generic rotations contribute multiplications: 4 each.  The
    addition census tallies the butterflies: each of the ``m`` stages
    performs ``N/2`` pair butterflies at 4 real additions apiece.  Both
    transform variants use the same rotation tables, so their reports
    are identical.
    """
    ident = quarter = generic = 0
    for st in plan.twiddles.stages:
        n_i, n_q, n_g = st.kind_counts()
        ident += n_i
        quarter += n_q
        generic += n_g
    n = 1 << plan.m
    return FlopReport(
        real_mults=4 * generic,
        real_adds=4 * (n >> 1) * plan.m,
        generic_rotations=generic,
        quarter_turns=quarter,
        identity_rotations=ident,
    )
