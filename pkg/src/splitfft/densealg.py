"""Dense matrix algebra for cross-checking the transform kernels.

Everything here builds explicit float64 matrices: the per-stage factors
(butterflies, rotations, pairwise bit-reversal), the real 2Nx2N embedding
of the length-N DFT in both the split and the interleaved layout, and
:func:`verify_factorization`, which multiplies the factors out and
compares against the embedding entry by entry.  Dense sizes grow as
``4**m``, so every builder is guarded by a capacity limit.
"""

import numpy as np

from .errors import CapacityError
from .layout import bit_reverse_indices
from .twiddle import rotation_block

MAX_DENSE_ELEMENTS = 1 << 24

DEFAULT_DENSE_LIMIT = 8

VERIFY_TOLERANCE = 1e-12

BUTTERFLY2 = np.array([[1.0, 1.0], [1.0, -1.0]])
BUTTERFLY2.flags.writeable = False


def _check_capacity(rows: int, cols: int) -> None:
    if rows * cols > MAX_DENSE_ELEMENTS:
        raise CapacityError(
            f"dense matrix of shape ({rows}, {cols}) exceeds the element "
            f"limit {MAX_DENSE_ELEMENTS}"
        )


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with a capacity guard."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("kron expects two matrices")
    _check_capacity(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
    return np.kron(a, b)


def direct_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Block-diagonal stack of two matrices."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("direct_sum expects two matrices")
    _check_capacity(a.shape[0] + b.shape[0], a.shape[1] + b.shape[1])
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]))
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0] :, a.shape[1] :] = b
    return out


def pairwise_bitrev_matrix(m: int) -> np.ndarray:
    """The bit-reversal permutation on 2**m pairs, as a 2**(m+1) square matrix.

    Row ``k`` of the pair-level permutation selects pair ``bit_reverse(k)``,
    and each pair carries its (re, im) values together.
    """
    if m < 0:
        raise ValueError(f"stage count m must be >= 0, got {m}")
    n = 1 << m
    _check_capacity(2 * n, 2 * n)
    p = np.zeros((n, n))
    p[np.arange(n), bit_reverse_indices(m)] = 1.0
    return kron(p, np.eye(2))


def butterfly_stage_matrix(m: int, i: int) -> np.ndarray:
    """Dense form of stage-``i`` butterflies on 2**m pairs."""
    if not 1 <= i <= m:
        raise ValueError(f"stage index {i} out of range for m={m}")
    _check_capacity(2 << m, 2 << m)
    return kron(np.eye(1 << (m - i)), kron(BUTTERFLY2, np.eye(1 << i)))


def twiddle_stage_matrix(m: int, i: int) -> np.ndarray:
    """Dense form of stage-``i`` rotations on 2**m pairs.

    One block covers ``2**i`` pairs: the first half is untouched and pair
    ``q`` of the second half is rotated by ``2*pi*q / 2**i``.
    """
    if not 1 <= i <= m:
        raise ValueError(f"stage index {i} out of range for m={m}")
    _check_capacity(2 << m, 2 << m)
    r = 1 << (i - 1)
    block = np.eye(2 * r)
    for q in range(r):
        block = direct_sum(block, rotation_block(i, q).matrix())
    return kron(np.eye(1 << (m - i)), block)


def _snapped_angle_tables(n: int):
    k = np.arange(n, dtype=np.intp)
    prod = np.outer(k, k) % n
    angle = 2.0 * np.pi * prod / float(n)
    c = np.cos(angle)
    s = np.sin(angle)
    exact = (4 * prod) % n == 0
    c[exact] = np.round(c[exact])
    s[exact] = np.round(s[exact])
    c += 0.0
    s += 0.0
    return c, s


def cos_matrix(n: int) -> np.ndarray:
    """N x N matrix of cos(2*pi*k*l/N), snapped exactly at multiples of pi/2."""
    if n < 1:
        raise ValueError(f"transform length must be >= 1, got {n}")
    _check_capacity(n, n)
    return _snapped_angle_tables(n)[0]


def sin_matrix(n: int) -> np.ndarray:
    """N x N matrix of sin(2*pi*k*l/N), snapped exactly at multiples of pi/2."""
    if n < 1:
        raise ValueError(f"transform length must be >= 1, got {n}")
    _check_capacity(n, n)
    return _snapped_angle_tables(n)[1]


def dft_embedding_split(n: int) -> np.ndarray:
    """Real 2Nx2N DFT acting on the split layout [re..., im...].

    Block form [[C, S], [-S, C]], so that y_re = C x_re + S x_im and
    y_im = -S x_re + C x_im, matching y_k = sum_l x_l exp(-2j pi k l / N).
    """
    _check_capacity(2 * n, 2 * n)
    c = cos_matrix(n)
    s = sin_matrix(n)
    return np.block([[c, s], [-s, c]])


def dft_embedding_interleaved(n: int) -> np.ndarray:
    """Real 2Nx2N DFT acting on the interleaved layout [re0, im0, re1, ...]."""
    if n < 1:
        raise ValueError(f"transform length must be >= 1, got {n}")
    _check_capacity(2 * n, 2 * n)
    c, s = _snapped_angle_tables(n)
    out = np.zeros((2 * n, 2 * n))
    out[0::2, 0::2] = c
    out[0::2, 1::2] = s
    out[1::2, 0::2] = -s
    out[1::2, 1::2] = c
    return out


def split_to_interleaved_perm(n: int) -> np.ndarray:
    """Permutation taking the split layout to the interleaved layout.

    Conjugating: dft_embedding_interleaved(N) == Q @ dft_embedding_split(N) @ Q.T.
    """
    if n < 1:
        raise ValueError(f"transform length must be >= 1, got {n}")
    _check_capacity(2 * n, 2 * n)
    q = np.zeros((2 * n, 2 * n))
    idx = np.arange(n)
    q[2 * idx, idx] = 1.0
    q[2 * idx + 1, n + idx] = 1.0
    return q


def verify_factorization(m: int, algorithm="dit", *, dense_limit: int = DEFAULT_DENSE_LIMIT) -> float:
    """Multiply out the stage factors and compare against the DFT embedding.

    Builds the full dense product for a ``2**m``-point transform of the
    requested variant ("dit" or "dif") and returns the maximum absolute
    entry-wise deviation from :func:`dft_embedding_interleaved`.  A sound
    factorization lands within a few ulps; anything above
    :data:`VERIFY_TOLERANCE` should be treated as a failure.
    """
    from .transform import Algorithm  # local import to avoid a cycle

    algorithm = Algorithm(algorithm) if not isinstance(algorithm, Algorithm) else algorithm
    if m < 0:
        raise ValueError(f"stage count m must be >= 0, got {m}")
    if m > dense_limit:
        raise CapacityError(f"m={m} exceeds the dense verification limit {dense_limit}")
    if algorithm is Algorithm.DIT:
        product = pairwise_bitrev_matrix(m)
        for i in range(1, m + 1):
            product = butterfly_stage_matrix(m, i) @ (twiddle_stage_matrix(m, i) @ product)
    else:
        product = np.eye(2 << m)
        for i in range(m, 0, -1):
            product = twiddle_stage_matrix(m, i) @ (butterfly_stage_matrix(m, i) @ product)
        product = pairwise_bitrev_matrix(m) @ product
    return float(np.max(np.abs(product - dft_embedding_interleaved(1 << m))))


def dump_matrix(mat: np.ndarray) -> str:
    """Serialize a matrix as text: a 'rows cols' header, then one row per line.

    Values are written with 17 significant digits so float64 round-trips
    exactly through :func:`parse_matrix`.
    """
    mat = np.asarray(mat, dtype=np.float64)
    if mat.ndim != 2:
        raise ValueError("dump_matrix expects a matrix")
    lines = [f"{mat.shape[0]} {mat.shape[1]}"]
    for row in mat:
        lines.append(" ".join(f"{v:.17g}" for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    """Parse the text format written by :func:`dump_matrix`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad matrix header {lines[0]!r}: expected 'rows cols'")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"bad matrix header {lines[0]!r}: expected 'rows cols'") from None
    if rows < 0 or cols < 0:
        raise ValueError(f"bad matrix shape ({rows}, {cols})")
    _check_capacity(max(rows, 1), max(cols, 1))
    if len(lines) - 1 != rows:
        raise ValueError(f"expected {rows} rows, found {len(lines) - 1}")
    out = np.zeros((rows, cols))
    for r, line in enumerate(lines[1:]):
        fields = line.split()
        if len(fields) != cols:
            raise ValueError(f"row {r} has {len(fields)} values, expected {cols}")
        try:
            out[r] = [float(f) for f in fields]
        except ValueError:
            raise ValueError(f"row {r} contains a value that is not a float") from None
    return out
