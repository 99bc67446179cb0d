"""Tests for the two constructions and the infinite-stream helpers."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dragonfold.construct import (
    classic_instructions,
    dragon_fold,
    dragon_unfold,
    fold_step,
    parse_instructions,
    stream_prefix,
    stream_turn_at,
    unfold_step,
)
from dragonfold.core import Turn

rot_lists = st.text(alphabet="CA", max_size=10)

CLASSIC = ["", "L", "LLR", "LLRLLRR", "LLRLLRRLLLRRLRR"]


def test_classic_curves_by_both_methods():
    for n, expected in enumerate(CLASSIC):
        assert dragon_unfold(classic_instructions(n)) == expected
        assert dragon_fold(classic_instructions(n)) == expected


def test_step_base_cases():
    assert unfold_step("C", "") == "L"
    assert unfold_step("A", "") == "R"
    assert fold_step("", "C") == "L"
    assert fold_step("", "A") == "R"


def test_one_step_from_order_one():
    assert unfold_step("C", "L") == "LLR"
    assert fold_step("L", "C") == "LLR"


def test_steps_reject_unknown_instructions():
    with pytest.raises(ValueError):
        unfold_step("x", "")
    with pytest.raises(ValueError):
        fold_step("", "x")


def test_mixed_instructions_are_order_sensitive():
    # the two methods consume the list from opposite ends, yet still agree
    assert dragon_unfold("CA") == dragon_fold("CA") == "RLL"
    assert dragon_unfold("AC") == dragon_fold("AC") == "LRR"


@given(rot_lists)
def test_both_methods_agree(rs):
    assert dragon_unfold(rs) == dragon_fold(rs)


@given(rot_lists)
def test_length_is_a_power_of_two_minus_one(rs):
    assert len(dragon_fold(rs)) == 2 ** len(rs) - 1


@given(st.integers(min_value=0, max_value=12))
def test_each_order_unfolds_from_the_previous(n):
    cur = dragon_fold(classic_instructions(n))
    nxt = dragon_fold(classic_instructions(n + 1))
    assert nxt.startswith(cur)
    assert nxt == unfold_step("C", cur)


def test_classic_instructions():
    assert classic_instructions(0) == ""
    assert classic_instructions(3) == "CCC"
    with pytest.raises(ValueError):
        classic_instructions(-1)


def test_stream_prefix_values():
    assert stream_prefix(0) == ""
    assert stream_prefix(3) == "LLR"
    assert stream_prefix(7) == "LLRLLRR"
    assert stream_prefix(10) == "LLRLLRRLLL"
    with pytest.raises(ValueError):
        stream_prefix(-1)


def test_stream_turn_at_values():
    assert stream_turn_at(1) is Turn.L
    assert stream_turn_at(3) is Turn.R
    assert stream_turn_at(6) is Turn.R


def test_stream_turn_at_rejects_nonpositive_positions():
    with pytest.raises(ValueError):
        stream_turn_at(0)
    with pytest.raises(ValueError):
        stream_turn_at(-4)


@given(st.integers(min_value=1, max_value=4000))
def test_stream_turn_at_matches_the_materialized_prefix(i):
    assert stream_turn_at(i).value == stream_prefix(i)[i - 1]


def test_parse_instructions_is_case_insensitive():
    assert parse_instructions("caCA") == "CACA"
    assert parse_instructions("") == ""


def test_parse_instructions_rejects_other_characters():
    with pytest.raises(ValueError):
        parse_instructions("CAX")
    with pytest.raises(ValueError):
        parse_instructions("C A")
