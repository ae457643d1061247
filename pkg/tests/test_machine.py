"""Single-tape semantics: parsing, stepping, running, fuel, tracing."""

import random

import pytest

from conftest import all_bitstrings, machine_text
from oracles import interpret
from quadtm.errors import DeterminismError, MachineSyntaxError
from quadtm.machine import (
    Act,
    Configuration,
    Machine,
    Rule,
    Sym,
    build_machine,
    initial_config,
    parse_machine,
    run,
    serialize_machine,
    step,
)


def test_parse_serialize_round_trip():
    src = "a 0 R b\nb 1 L a\nb B 0 halt\n"
    m = parse_machine(src)
    assert serialize_machine(m) == src
    assert m.names == ("a", "b", "halt")
    assert m.start == 0
    m2 = parse_machine(serialize_machine(m))
    assert m2 == m


def test_parse_strips_comments_and_blanks():
    m = parse_machine("# heading\n\n  a 0 R a  # trailing\n")
    assert serialize_machine(m) == "a 0 R a\n"


def test_parse_machine_corpus_files():
    for name in ("one_right", "spin", "write1", "three_cells", "loop0"):
        m = parse_machine(machine_text(name))
        assert serialize_machine(m).strip().splitlines()


def test_parse_syntax_errors():
    bad = [
        "",  # no rules
        "a 0 R\n",  # three fields
        "a 2 R a\n",  # bad symbol
        "a 0 X a\n",  # bad action
        "1a 0 R a\n",  # bad state name
        "a 00 RR a\n",  # multitape widths on a single-tape machine
        "a 0 R b\ntapes: 1\n",  # header after a rule
    ]
    for src in bad:
        with pytest.raises(MachineSyntaxError):
            parse_machine(src)


def test_duplicate_rule_key_rejected():
    with pytest.raises(DeterminismError):
        parse_machine("a 0 R a\na 0 L a\n")


def test_machine_invariants():
    with pytest.raises(MachineSyntaxError):
        Machine((), ())
    with pytest.raises(MachineSyntaxError):
        Machine((Rule(0, Sym.ZERO, Act.RIGHT, 0),), ("a", "ghost"))
    with pytest.raises(MachineSyntaxError):
        Machine((Rule(0, Sym.ZERO, Act.RIGHT, 2),), ("a", "b"))


def test_initial_config_and_scanning():
    m = parse_machine("a 0 R a\n")
    c = initial_config(m, "011")
    assert (c.state, c.head) == (0, 0)
    assert c.scanned() is Sym.ZERO
    assert initial_config(m, "").scanned() is Sym.BLANK
    with pytest.raises(ValueError):
        initial_config(m, "01x")


def test_step_actions():
    m = build_machine(
        [("a", "0", "1", "b"), ("b", "1", "B", "c"), ("c", "B", "L", "d"), ("d", "B", "R", "a")]
    )
    c = initial_config(m, "0")
    c = step(m, c)
    assert (c.state, c.head, dict(c.tape)) == (1, 0, {0: Sym.ONE})
    c = step(m, c)
    assert (c.state, c.head, dict(c.tape)) == (2, 0, {})
    c = step(m, c)
    assert (c.state, c.head) == (3, -1)
    c = step(m, c)
    assert (c.state, c.head) == (0, 0)
    assert step(m, c) is None  # a scans blank now: no rule


def test_halt_is_absence_of_rule():
    m = parse_machine("q1 0 R q1\n")
    out = run(m, "0011")
    assert out.halted and out.steps == 2
    assert out.config.head == 2 and out.config.scanned() is Sym.ONE


# --- fuel semantics --------------------------------------------------------


def test_fuel_zero_detects_immediate_halt():
    m = parse_machine("q1 0 R q1\n")
    out = run(m, "", fuel=0)
    assert out.halted and out.steps == 0


def test_fuel_zero_on_live_machine():
    m = parse_machine(machine_text("spin"))
    out = run(m, "", fuel=0)
    assert not out.halted and out.steps == 0


def test_halt_at_exact_fuel_boundary():
    m = parse_machine("q1 0 R q1\n")  # halts after 3 steps on 000
    for fuel, halted, steps in ((2, False, 2), (3, True, 3), (4, True, 3)):
        out = run(m, "000", fuel=fuel)
        assert (out.halted, out.steps) == (halted, steps)


def test_fuel_monotone():
    m = parse_machine(machine_text("three_cells"))
    verdicts = [run(m, "", fuel=f).halted for f in range(8)]
    assert verdicts == sorted(verdicts)  # once halted, stays halted
    with pytest.raises(ValueError):
        run(m, "", fuel=-1)


# --- randomized equivalence against the dict interpreter -------------------


def _random_quads(rng: random.Random):
    n_states = rng.randint(1, 5)
    states = ["s%d" % i for i in range(n_states)]
    keys = [(p, s) for p in states for s in "01B"]
    rng.shuffle(keys)
    quads = []
    for p, s in keys[: rng.randint(1, len(keys))]:
        quads.append((p, s, rng.choice("01BLR"), rng.choice(states)))
    return quads


def test_run_matches_reference_interpreter_randomized():
    rng = random.Random(1234)
    for _ in range(300):
        quads = _random_quads(rng)
        try:
            m = build_machine(quads)
        except MachineSyntaxError:
            continue  # some chosen state never appears: not a machine
        for w in ("", "0", "1", "0110", "10101"):
            fuel = rng.randint(0, 60)
            got = run(m, w, fuel=fuel)
            halted, steps, tape, head, _ = interpret(quads, w, fuel)
            assert got.halted == halted and got.steps == steps
            assert got.config.head == head
            got_tape = {i: "01"[s] for i, s in got.config.tape.items()}
            assert got_tape == tape


def test_traced_run_matches_kernel_run():
    m = parse_machine(machine_text("one_right"))
    seen = []
    traced = run(m, "0001", fuel=50, trace=lambda n, c: seen.append((n, c.state, c.head)))
    plain = run(m, "0001", fuel=50)
    assert (traced.halted, traced.steps) == (plain.halted, plain.steps)
    assert traced.config == plain.config
    assert seen == [(0, 0, 0), (1, 0, 1), (2, 0, 2)]


def test_run_rejects_bad_input_alphabet():
    m = parse_machine("a 0 R a\n")
    with pytest.raises(ValueError):
        run(m, "0b1")
