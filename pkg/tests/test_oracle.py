"""The naive reference transforms."""

import numpy as np
import pytest

from splitfft.layout import SplitSignal
from splitfft.oracle import _trig_tables, naive_dft, naive_real_matvec


def test_impulse():
    re = np.zeros(8)
    re[0] = 1.0
    out = naive_dft(SplitSignal(re, np.zeros(8)))
    assert np.max(np.abs(out.re - 1.0)) <= 1e-15
    assert np.max(np.abs(out.im)) <= 1e-15


def test_four_point_known_answer():
    out = naive_dft(SplitSignal([1.0, 2.0, 3.0, 4.0], np.zeros(4)))
    assert np.max(np.abs(out.re - [10.0, -2.0, -2.0, -2.0])) <= 1e-13
    assert np.max(np.abs(out.im - [0.0, 2.0, 0.0, -2.0])) <= 1e-13


def test_length_one_is_identity():
    out = naive_dft(SplitSignal([2.5], [-1.5]))
    assert out.re.tolist() == [2.5]
    assert out.im.tolist() == [-1.5]


def test_rejects_empty_signal():
    with pytest.raises(ValueError, match="empty"):
        naive_dft(SplitSignal([], []))
    with pytest.raises(ValueError, match="empty"):
        naive_real_matvec(SplitSignal([], []))


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 12, 16, 100])
def test_matches_numpy_for_any_length(n):
    rng = np.random.default_rng(n)
    sig = SplitSignal(rng.standard_normal(n), rng.standard_normal(n))
    ref = np.fft.fft(sig.re + 1j * sig.im)
    out = naive_dft(sig)
    scale = 1.0 + np.max(np.abs(ref))
    assert np.max(np.abs(out.re - ref.real)) <= 1e-11 * scale
    assert np.max(np.abs(out.im - ref.imag)) <= 1e-11 * scale


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 12, 16, 100])
def test_two_oracle_routes_agree(n):
    rng = np.random.default_rng(n + 1000)
    sig = SplitSignal(rng.standard_normal(n), rng.standard_normal(n))
    a = naive_dft(sig)
    b = naive_real_matvec(sig)
    assert np.max(np.abs(a.re - b.re)) <= 1e-10 * (1 + np.max(np.abs(a.re)))
    assert np.max(np.abs(a.im - b.im)) <= 1e-10 * (1 + np.max(np.abs(a.im)))


def test_parseval_for_non_power_of_two():
    rng = np.random.default_rng(9)
    n = 12
    sig = SplitSignal(rng.standard_normal(n), rng.standard_normal(n))
    out = naive_dft(sig)
    time_energy = np.sum(sig.re**2 + sig.im**2)
    freq_energy = np.sum(out.re**2 + out.im**2) / n
    assert abs(time_energy - freq_energy) <= 1e-9 * (1 + time_energy)


def test_trig_tables_are_cached_and_read_only():
    a = _trig_tables(8)
    b = _trig_tables(8)
    assert a[0] is b[0]
    with pytest.raises(ValueError):
        a[0][0, 0] = 2.0
