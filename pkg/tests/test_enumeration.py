"""The standard enumeration: order, indexing, and budgets."""

import pytest

from quadtm import kernels
from quadtm.codec import decode_machine, encode_machine
from quadtm.enumeration import (
    DEFAULT_MAX_CODE_LEN,
    enumerate_codes,
    enumerate_machines,
    godel_number,
    is_valid_code,
    machine_of_index,
)
from quadtm.errors import BudgetError
from quadtm.funclib import library
from quadtm.machine import build_machine, serialize_machine


def test_enumeration_equals_brute_force_scan():
    smart = list(enumerate_codes(24))
    brute = kernels.scan_valid_codes(24)
    assert smart == brute


def test_code_population_by_length():
    codes = list(enumerate_codes(24))
    assert len(codes) == 30
    assert all(len(c) == 20 for c in codes)
    # next machines appear only at 32 bits (two-rule or three-state codes)
    assert len(list(enumerate_codes(31))) == 30
    longer = list(enumerate_codes(32))
    assert len(longer) > 30
    assert all(len(c) == 32 for c in longer[30:])


def test_codes_are_sorted_by_length_then_value():
    codes = list(enumerate_codes(32))
    keys = [(len(c), c) for c in codes]
    assert keys == sorted(keys)
    assert len(set(codes)) == len(codes)


def test_first_machine_is_write0_self_loop():
    m = machine_of_index(1)
    assert serialize_machine(m) == "q1 0 0 q1\n"


def test_enumerate_machines_matches_decoded_codes():
    pairs = list(enumerate_machines(24))
    codes = list(enumerate_codes(24))
    assert [i for i, _ in pairs] == list(range(1, 31))
    for (_, machine), code in zip(pairs, codes):
        assert machine == decode_machine(code)[0]
        assert encode_machine(machine) == code


def test_index_round_trip_default_budget():
    for i in range(1, 31):
        assert godel_number(machine_of_index(i)) == i


def test_index_round_trip_extended_budget():
    # indices 31..100 live in the 32-bit code groups
    for i in range(1, 101):
        m = machine_of_index(i, 32)
        assert godel_number(m, 32) == i


def test_known_index_of_one_rule_right_mover():
    m = build_machine([("q1", "0", "R", "q1")])
    assert godel_number(m) == 9


def test_budget_errors():
    with pytest.raises(BudgetError):
        machine_of_index(31)  # only 30 machines fit in 24 bits
    big = library("eq_pred").machine  # code far beyond the default budget
    with pytest.raises(BudgetError):
        godel_number(big)
    with pytest.raises(ValueError):
        machine_of_index(0)


def test_is_valid_code_requires_whole_string():
    codes = list(enumerate_codes(24))
    assert all(is_valid_code(c) for c in codes)
    assert not is_valid_code(codes[0] + "0")
    assert not is_valid_code(codes[0][:-1])
    assert not is_valid_code("")


def test_default_budget_value():
    assert DEFAULT_MAX_CODE_LEN == 24