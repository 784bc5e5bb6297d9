"""Rotation (twiddle) tables for the radix-2 stages.

A stage-``i`` rotation with index ``q`` acts on one (re, im) pair as the
2x2 real matrix

    [ cos(a)   sin(a) ]
    [ -sin(a)  cos(a) ]       with a = 2*pi*q / 2**i,

which is exactly multiplication of the complex value ``re + j*im`` by
``exp(-j*a)``.  Angles that land on a multiple of pi/2 are snapped to the
exact values 0 and +-1 so that trivial rotations can be recognised by
equality and cost no real arithmetic.
"""

import enum
from dataclasses import dataclass

import numpy as np


class RotationKind(enum.Enum):
    IDENTITY = "identity"
    QUARTER_TURN = "quarter_turn"
    GENERIC = "generic"


def classify_rotation(c: float, s: float) -> RotationKind:
    """Classify a rotation by its (snapped) cosine/sine entries."""
    if c == 1.0 and s == 0.0:
        return RotationKind.IDENTITY
    if c == 0.0 and s == 1.0:
        return RotationKind.QUARTER_TURN
    return RotationKind.GENERIC


@dataclass(frozen=True)
class RotationBlock:
    c: float
    s: float
    kind: RotationKind

    def matrix(self) -> np.ndarray:
        return np.array([[self.c, self.s], [-self.s, self.c]], dtype=np.float64)


def _snapped_cos_sin(i: int, q: np.ndarray):
    """cos/sin of 2*pi*q/2**i with exact values at multiples of pi/2."""
    angle = 2.0 * np.pi * q / float(1 << i)
    c = np.cos(angle)
    s = np.sin(angle)
    exact = (4 * q) % (1 << i) == 0
    c[exact] = np.round(c[exact])
    s[exact] = np.round(s[exact])
    # round() can leave -0.0 behind; normalise so equality checks read cleanly
    c += 0.0
    s += 0.0
    return c, s


def rotation_block(i: int, q: int) -> RotationBlock:
    """The q-th rotation of stage i (0 <= q < 2**(i-1), i >= 1)."""
    if i < 1:
        raise ValueError(f"stage index must be >= 1, got {i}")
    if not 0 <= q < (1 << (i - 1)):
        raise ValueError(f"rotation index {q} out of range for stage {i}")
    c, s = _snapped_cos_sin(i, np.array([q], dtype=np.intp))
    return RotationBlock(float(c[0]), float(s[0]), classify_rotation(c[0], s[0]))


@dataclass(frozen=True)
class TwiddleStage:
    """All ``2**(i-1)`` rotations of one stage, as flat cos/sin arrays."""

    i: int
    cos: np.ndarray
    sin: np.ndarray

    def __len__(self) -> int:
        return self.cos.size

    def block(self, q: int) -> RotationBlock:
        if not 0 <= q < self.cos.size:
            raise ValueError(f"rotation index {q} out of range for stage {self.i}")
        c = float(self.cos[q])
        s = float(self.sin[q])
        return RotationBlock(c, s, classify_rotation(c, s))

    def kind_counts(self):
        """(identity, quarter_turn, generic) counts over this stage."""
        ident = int(np.count_nonzero((self.cos == 1.0) & (self.sin == 0.0)))
        quarter = int(np.count_nonzero((self.cos == 0.0) & (self.sin == 1.0)))
        return ident, quarter, self.cos.size - ident - quarter


@dataclass(frozen=True)
class TwiddleTable:
    m: int
    stages: tuple

    def stage(self, i: int) -> TwiddleStage:
        if not 1 <= i <= self.m:
            raise ValueError(f"stage index {i} out of range for m={self.m}")
        return self.stages[i - 1]

    def block(self, i: int, q: int) -> RotationBlock:
        return self.stage(i).block(q)


def build_twiddle_table(m: int) -> TwiddleTable:
    """Precompute rotation tables for stages 1..m of a 2**m-point transform."""
    if m < 0:
        raise ValueError(f"stage count m must be >= 0, got {m}")
    stages = []
    for i in range(1, m + 1):
        q = np.arange(1 << (i - 1), dtype=np.intp)
        c, s = _snapped_cos_sin(i, q)
        c.flags.writeable = False
        s.flags.writeable = False
        stages.append(TwiddleStage(i, c, s))
    return TwiddleTable(m, tuple(stages))
