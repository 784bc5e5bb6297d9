"""Rotation blocks and table construction."""

import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitfft.twiddle import (
    RotationKind,
    build_twiddle_table,
    classify_rotation,
    rotation_block,
)

SQ2 = np.sqrt(2.0) / 2.0


def test_stage_one_rotation_is_identity():
    rb = rotation_block(1, 0)
    assert rb.kind is RotationKind.IDENTITY
    assert (rb.c, rb.s) == (1.0, 0.0)
    assert np.array_equal(rb.matrix(), np.eye(2))


def test_quarter_turn_is_exact():
    rb = rotation_block(2, 1)
    assert rb.kind is RotationKind.QUARTER_TURN
    assert (rb.c, rb.s) == (0.0, 1.0)
    assert np.array_equal(rb.matrix(), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def test_eighth_turn_values():
    rb = rotation_block(3, 1)
    assert rb.kind is RotationKind.GENERIC
    assert abs(rb.c - SQ2) <= 1e-15
    assert abs(rb.s - SQ2) <= 1e-15


def test_three_eighths_turn_values():
    # distinct from the eighth turn: cosine flips sign, sine does not
    rb = rotation_block(3, 3)
    assert rb.kind is RotationKind.GENERIC
    assert abs(rb.c + SQ2) <= 1e-15
    assert abs(rb.s - SQ2) <= 1e-15


def test_half_way_rotations_snap():
    # q = 2**(i-2) is the quarter turn for every stage i >= 2
    for i in range(2, 14):
        rb = rotation_block(i, 1 << (i - 2))
        assert rb.kind is RotationKind.QUARTER_TURN
        assert (rb.c, rb.s) == (0.0, 1.0)


def test_rotation_index_checks():
    with pytest.raises(ValueError, match="out of range"):
        rotation_block(3, 4)
    with pytest.raises(ValueError, match="out of range"):
        rotation_block(1, 1)
    with pytest.raises(ValueError, match="stage index"):
        rotation_block(0, 0)


@given(st.integers(min_value=1, max_value=16), st.data())
@settings(max_examples=100)
def test_rotation_matches_complex_phase(i, data):
    q = data.draw(st.integers(min_value=0, max_value=(1 << (i - 1)) - 1))
    rb = rotation_block(i, q)
    expected = cmath.exp(-2j * cmath.pi * q / (1 << i))
    applied = complex(rb.c - 1j * rb.s)
    assert abs(applied - expected) <= 1e-15


@given(st.integers(min_value=1, max_value=16), st.data())
@settings(max_examples=100)
def test_rotation_is_orthogonal(i, data):
    q = data.draw(st.integers(min_value=0, max_value=(1 << (i - 1)) - 1))
    mat = rotation_block(i, q).matrix()
    assert np.max(np.abs(mat.T @ mat - np.eye(2))) <= 1e-15
    assert abs(np.linalg.det(mat) - 1.0) <= 1e-15


def test_table_shapes():
    table = build_twiddle_table(5)
    assert table.m == 5
    assert len(table.stages) == 5
    for i in range(1, 6):
        assert len(table.stage(i)) == 1 << (i - 1)
    with pytest.raises(ValueError, match="out of range"):
        table.stage(6)
    with pytest.raises(ValueError, match="out of range"):
        table.stage(0)
    with pytest.raises(ValueError, match="out of range"):
        table.stage(2).block(2)


def test_table_blocks_match_rotation_block():
    table = build_twiddle_table(6)
    for i in range(1, 7):
        for q in range(1 << (i - 1)):
            a = table.block(i, q)
            b = rotation_block(i, q)
            assert (a.c, a.s, a.kind) == (b.c, b.s, b.kind)


def test_empty_table():
    table = build_twiddle_table(0)
    assert table.stages == ()
    with pytest.raises(ValueError):
        build_twiddle_table(-1)


def test_snapped_entries_are_exact_and_others_are_not():
    table = build_twiddle_table(10)
    for st_ in table.stages:
        period = 1 << st_.i
        for q in range(len(st_)):
            c, s = float(st_.cos[q]), float(st_.sin[q])
            if (4 * q) % period == 0:
                assert c in (-1.0, 0.0, 1.0)
                assert s in (-1.0, 0.0, 1.0)
            else:
                assert c not in (-1.0, 0.0, 1.0)
                assert s not in (-1.0, 0.0, 1.0)


def test_kind_counts_follow_closed_forms():
    # per stage i: one identity, one quarter turn for i >= 2, rest generic
    for m in range(1, 11):
        table = build_twiddle_table(m)
        ident = quarter = generic = 0
        for st_ in table.stages:
            a, b, c = st_.kind_counts()
            ident += a
            quarter += b
            generic += c
        assert ident == m
        assert quarter == max(m - 1, 0)
        assert generic == (1 << m) - 2 * m


def test_classify_rotation():
    assert classify_rotation(1.0, 0.0) is RotationKind.IDENTITY
    assert classify_rotation(0.0, 1.0) is RotationKind.QUARTER_TURN
    assert classify_rotation(SQ2, SQ2) is RotationKind.GENERIC
    assert classify_rotation(-1.0, 0.0) is RotationKind.GENERIC
