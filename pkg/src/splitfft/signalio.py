"""Reading and writing split signals as CSV text or raw binary.

CSV files carry one ``re,im`` pair per line; a first line that does not
parse as two floats is treated as a header and skipped.  Binary files are
little-endian float64 with the two channels interleaved
(``re0, im0, re1, im1, ...``).  Values written as CSV use 17 significant
digits, so float64 round-trips exactly.
"""

import enum
import os

import numpy as np

from .layout import SplitSignal


class SignalFormat(enum.Enum):
    CSV = "csv"
    BIN = "bin"


class SignalReadError(ValueError):
    """A signal file could not be parsed."""


_EXTENSIONS = {".csv": SignalFormat.CSV, ".bin": SignalFormat.BIN}


def detect_format(path) -> SignalFormat:
    """Pick a format from the file extension (.csv or .bin)."""
    ext = os.path.splitext(os.fspath(path))[1].lower()
    fmt = _EXTENSIONS.get(ext)
    if fmt is None:
        raise SignalReadError(
            f"cannot infer signal format from {path!r}; expected a .csv or .bin "
            f"extension (or pass the format explicitly)"
        )
    return fmt


def _parse_pair(line: str):
    fields = line.split(",")
    if len(fields) != 2:
        return None
    try:
        return float(fields[0]), float(fields[1])
    except ValueError:
        return None


def _read_csv(path) -> SplitSignal:
    re = []
    im = []
    with open(path, "r", encoding="utf-8") as f:
        lines = f.read().splitlines()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        pair = _parse_pair(line)
        if pair is None:
            if lineno == 1:
                continue  # header row
            raise SignalReadError(
                f"{path}: line {lineno}: expected 're,im' with two floats, got {line!r}"
            )
        re.append(pair[0])
        im.append(pair[1])
    if not re:
        raise SignalReadError(f"{path}: no samples found")
    return SplitSignal(np.array(re), np.array(im))


def _read_bin(path) -> SplitSignal:
    raw = np.fromfile(path, dtype="<f8")
    if raw.size == 0:
        raise SignalReadError(f"{path}: no samples found")
    if raw.size % 2:
        raise SignalReadError(
            f"{path}: {raw.size} float64 values do not form whole (re, im) pairs"
        )
    return SplitSignal(raw[0::2].astype(np.float64), raw[1::2].astype(np.float64))


def read_signal(path, fmt: SignalFormat | None = None) -> SplitSignal:
    """Load a split signal, inferring the format from the extension if needed."""
    fmt = detect_format(path) if fmt is None else SignalFormat(fmt)
    if fmt is SignalFormat.CSV:
        return _read_csv(path)
    return _read_bin(path)


def write_signal(path, signal: SplitSignal, fmt: SignalFormat | None = None) -> None:
    """Write a split signal, inferring the format from the extension if needed."""
    fmt = detect_format(path) if fmt is None else SignalFormat(fmt)
    if fmt is SignalFormat.CSV:
        with open(path, "w", encoding="utf-8") as f:
            for r, i in zip(signal.re, signal.im):
                f.write(f"{r:.17g},{i:.17g}\n")
        return
    data = np.empty(2 * len(signal), dtype="<f8")
    data[0::2] = signal.re
    data[1::2] = signal.im
    data.tofile(path)
