"""Library machines against host oracles, and the calling conventions."""

import pytest

from conftest import all_bitstrings, machine_text
from oracles import ORDER, bar
from quadtm.funclib import (
    FnResult,
    LIBRARY,
    block_value,
    encode_args,
    eval_fn,
    eval_stream_fn,
    library,
    library_names,
    read_output,
)
from quadtm.machine import Configuration, Sym, parse_machine


# --- conventions -----------------------------------------------------------


def test_encode_args_shapes():
    assert encode_args([]) == ""
    assert encode_args([0]) == "0"
    assert encode_args([1]) == "100"
    assert encode_args([1, 2]) == "100" + "101"
    assert encode_args([5]) == "11010"  # bar("10")


def test_block_value_reads_maximal_block():
    tape = {3: Sym.ONE, 4: Sym.ZERO, 6: Sym.ONE}
    # block "10" around cells 3..4 has rank 5
    assert block_value(tape, 3) == 5
    assert block_value(tape, 4) == 5
    assert block_value(tape, 6) == 2  # the lone "1"
    assert block_value(tape, 5) == 0  # blank under the head
    assert block_value({}, 0) == 0


def test_read_output_translation_invariant():
    a = Configuration(0, 5, {5: Sym.ONE, 6: Sym.ZERO})
    b = Configuration(0, -3, {-3: Sym.ONE, -2: Sym.ZERO})
    assert read_output(a) == read_output(b) == 5


def test_fnresult_states():
    v = FnResult.of(7)
    assert v.is_value and v.value == 7 and v.status == "value"
    assert not FnResult.diverged().is_value
    assert FnResult.undefined().status == "undefined"


def test_eval_fn_divergence():
    m = parse_machine(machine_text("loop0"))
    assert eval_fn(m, [0], fuel=500) == FnResult.diverged()


def test_library_listing_and_lookup():
    names = library_names()
    assert names == sorted(LIBRARY)
    for expected in (
        "successor",
        "zero_1",
        "zero_2",
        "zero_3",
        "length",
        "bar_fn",
        "left_g",
        "right_h",
        "eq_pred",
        "proj_1_1",
        "proj_1_2",
        "proj_1_3",
        "proj_2_2",
        "proj_2_3",
        "proj_3_3",
    ):
        assert expected in names
    with pytest.raises(KeyError):
        library("no_such_fn")


# --- value-convention machines vs host oracles -----------------------------


def test_successor_oracle():
    f = library("successor")
    for y in range(65):
        assert f(y) == FnResult.of(y + 1), y


def test_zero_oracles_all_arities():
    assert all(library("zero_1")(y) == FnResult.of(0) for y in range(65))
    z2 = library("zero_2")
    assert all(z2(a, b) == FnResult.of(0) for a in range(11) for b in range(11))
    z3 = library("zero_3")
    assert all(
        z3(a, b, c) == FnResult.of(0)
        for a in range(6)
        for b in range(6)
        for c in range(6)
    )


def test_length_oracle():
    f = library("length")
    for y in range(65):
        assert f(y) == FnResult.of(len(ORDER.string_of(y))), y


def test_bar_fn_oracle():
    f = library("bar_fn")
    for y in range(65):
        want = ORDER.rank_of(bar(ORDER.string_of(y)))
        assert f(y) == FnResult.of(want), y


def test_projection_oracles():
    p11 = library("proj_1_1")
    for y in range(65):
        assert p11(y) == FnResult.of(y)
    for name, arity, pick in (
        ("proj_1_2", 2, 0),
        ("proj_2_2", 2, 1),
        ("proj_1_3", 3, 0),
        ("proj_2_3", 3, 1),
        ("proj_3_3", 3, 2),
    ):
        f = library(name)
        assert f.arity == arity
        if arity == 2:
            grid = [(a, b) for a in range(13) for b in range(13)]
        else:
            grid = [(a, b, c) for a in range(7) for b in range(7) for c in range(7)]
        for args in grid:
            assert f(*args) == FnResult.of(args[pick]), (name, args)


# --- stream-convention machines vs host oracles ----------------------------


def test_left_and_right_oracles():
    g = library("left_g")
    h = library("right_h")
    assert g.convention == h.convention == "stream"
    for x in all_bitstrings(4):
        for y in all_bitstrings(4):
            stream = bar(x) + y
            assert g(stream) == FnResult.of(ORDER.rank_of(x)), (x, y)
            assert h(stream) == FnResult.of(ORDER.rank_of(y)), (x, y)


def test_eq_pred_oracle():
    eq = library("eq_pred")
    for x in all_bitstrings(4):
        for y in all_bitstrings(4):
            want = 1 if x == y else 0
            assert eq(bar(x) + y) == FnResult.of(want), (x, y)


def test_eq_pred_longer_spot_checks():
    eq = library("eq_pred")
    for x, y in (
        ("10110", "10110"),
        ("10110", "10111"),
        ("101101", "101101"),
        ("000000", "000001"),
        ("111111", "111111"),
    ):
        assert eq(bar(x) + y) == FnResult.of(1 if x == y else 0)


def test_stream_undefined_on_malformed_input():
    for name in ("left_g", "right_h", "eq_pred"):
        f = library(name)
        for stream in ("1111", "111", "1", ""):
            assert f(stream) == FnResult.undefined(), (name, stream)


def test_stream_fn_direct_interface():
    m = library("left_g").machine
    assert eval_stream_fn(m, "0") == FnResult.of(0)  # bar("") + ""
    assert eval_stream_fn(m, "1111") == FnResult.undefined()