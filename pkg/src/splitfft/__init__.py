"""Radix-2 DFT over separate real/imaginary channels.

The package keeps complex samples as explicit (re, im) float64 pairs and
factors the transform into sparse real-valued stages — butterflies,
plane rotations, and one pairwise bit-reversal — in both
decimation-in-time and decimation-in-frequency order.  A dense matrix
layer can multiply the stage factors out and verify them against the
real embedding of the DFT, and an HTTP service plus CLI expose the
transform, the verifier, and a benchmark.
"""

__version__ = "0.1.0"

from .densealg import verify_factorization
from .errors import CapacityError
from .layout import (
    InterleavedBuffer,
    SplitSignal,
    deinterleave,
    interleave,
    permute_pairwise_bitrev,
)
from .oracle import naive_dft
from .transform import (
    Algorithm,
    FftPlan,
    FlopReport,
    count_flops,
    fft,
    fft_dif,
    fft_dit,
    ifft,
    make_plan,
)

__all__ = [
    "Algorithm",
    "CapacityError",
    "FftPlan",
    "FlopReport",
    "InterleavedBuffer",
    "SplitSignal",
    "count_flops",
    "deinterleave",
    "fft",
    "fft_dif",
    "fft_dit",
    "ifft",
    "interleave",
    "make_plan",
    "naive_dft",
    "permute_pairwise_bitrev",
    "verify_factorization",
    "__version__",
]
