"""Tests for the paper-strip folding simulation."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dragonfold.construct import classic_instructions, dragon_fold
from dragonfold.paperfold import MAX_FOLDS, Layer, StripStack, creases, fold_once, new_strip


def test_new_strip_is_flat():
    strip = new_strip(3)
    assert strip == StripStack(8, (Layer(0, 1),))


def test_new_strip_caps_fold_count():
    with pytest.raises(ValueError):
        new_strip(-1)
    with pytest.raises(ValueError):
        new_strip(MAX_FOLDS + 1)
    assert new_strip(0).width == 1


def test_layer_cell_maps():
    assert Layer(0, 1).cell(3) == 3
    assert Layer(8, -1).cell(0) == 7
    assert Layer(8, -1).cell(3) == 4


def test_one_fold_of_a_two_cell_strip():
    stack = fold_once(new_strip(1))
    assert stack.width == 1
    assert stack.layers == (Layer(0, 1), Layer(2, -1))


def test_two_folds_stack_cells_bottom_to_top_0_3_2_1():
    stack = fold_once(fold_once(new_strip(2)))
    assert stack.width == 1
    assert [layer.cell(0) for layer in stack.layers] == [0, 3, 2, 1]


def test_folding_a_single_cell_fails():
    with pytest.raises(ValueError):
        fold_once(new_strip(0))


@given(st.integers(min_value=0, max_value=10))
def test_fold_bookkeeping(n):
    stack = new_strip(n)
    for k in range(n + 1):
        assert stack.width == 2 ** (n - k)
        assert len(stack.layers) == 2**k
        # the layers tile the original strip exactly, no gaps or overlaps
        cells = sorted(
            layer.cell(x) for layer in stack.layers for x in range(stack.width)
        )
        assert cells == list(range(2**n))
        if k < n:
            stack = fold_once(stack)


def test_small_crease_sequences():
    assert creases(0) == ""
    assert creases(1) == "L"
    assert creases(2) == "LLR"


@given(st.integers(min_value=0, max_value=10))
def test_creases_match_the_folding_construction(n):
    assert creases(n) == dragon_fold(classic_instructions(n))
