"""Single-tape machines built from quadruple rules.

A rule (p, s, a, q) reads: in state p scanning symbol s, perform action a
and enter state q.  Actions either write one of the three tape symbols or
move the head one cell; there is no combined write-and-move.  The machine
halts when no rule matches the current (state, scanned symbol) pair, so
halting states are simply names that never appear on the left-hand side.

The tape is unbounded in both directions and blank outside the input,
which is written on cells 0..len-1 with the head starting on cell 0.
Every run takes a step budget ("fuel"); running out of fuel is a normal,
reportable outcome, not an error.
"""

from __future__ import annotations

import re
from array import array
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Callable, Iterable, Mapping, Optional

from . import kernels
from .errors import DeterminismError, MachineSyntaxError

DEFAULT_FUEL = 10_000

SYM_CHARS = "01B"
ACT_CHARS = "01BLR"


class Sym(IntEnum):
    ZERO = 0
    ONE = 1
    BLANK = 2


class Act(IntEnum):
    WRITE0 = 0
    WRITE1 = 1
    WRITEB = 2
    LEFT = 3
    RIGHT = 4


@dataclass(frozen=True)
class Rule:
    state: int
    scan: Sym
    act: Act
    succ: int


@dataclass(frozen=True)
class Machine:
    """An immutable rule list plus display names for the state ids.

    State ids are indexes into `names`; every id in range must occur in
    some rule.  The start state is the first rule's left-hand state.
    """

    rules: tuple[Rule, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        if not self.rules:
            raise MachineSyntaxError("a machine needs at least one rule")
        seen: set[tuple[int, Sym]] = set()
        used: set[int] = set()
        for r in self.rules:
            if not (0 <= r.state < len(self.names) and 0 <= r.succ < len(self.names)):
                raise MachineSyntaxError("rule refers to a state id with no name")
            key = (r.state, r.scan)
            if key in seen:
                raise DeterminismError(
                    "two rules fire on (%s, %s)" % (self.names[r.state], SYM_CHARS[r.scan])
                )
            seen.add(key)
            used.add(r.state)
            used.add(r.succ)
        if used != set(range(len(self.names))):
            raise MachineSyntaxError("state name list does not match the rules")

    @property
    def start(self) -> int:
        return self.rules[0].state

    @property
    def n_states(self) -> int:
        return len(self.names)

    @cached_property
    def table(self) -> dict:
        return {(r.state, r.scan): r for r in self.rules}

    @cached_property
    def _dense(self):
        # action table padded with 5 = "no rule", successor table beside it
        n = len(self.names)
        act = bytearray(b"\x05" * (3 * n))
        nxt = array("i", [0] * (3 * n))
        for r in self.rules:
            i = r.state * 3 + r.scan
            act[i] = r.act
            nxt[i] = r.succ
        return bytes(act), nxt


@dataclass(frozen=True)
class Configuration:
    """Machine state, head position, and the non-blank tape cells."""

    state: int
    head: int
    tape: Mapping[int, Sym]

    def scanned(self) -> Sym:
        return self.tape.get(self.head, Sym.BLANK)


@dataclass(frozen=True)
class Outcome:
    """Result of a fueled run: `halted` distinguishes a genuine halt from
    fuel exhaustion; `config` is the configuration reached either way."""

    halted: bool
    config: Configuration
    steps: int


def validate_bits(bits: str) -> str:
    if not all(c in "01" for c in bits):
        raise ValueError("expected a string over 0/1, got %r" % (bits,))
    return bits


def initial_config(machine: Machine, bits: str) -> Configuration:
    validate_bits(bits)
    tape = {i: Sym(int(b)) for i, b in enumerate(bits)}
    return Configuration(machine.start, 0, tape)


def step(machine: Machine, config: Configuration) -> Optional[Configuration]:
    """One move; None when no rule matches (the machine has halted)."""
    rule = machine.table.get((config.state, config.scanned()))
    if rule is None:
        return None
    head = config.head
    tape = dict(config.tape)
    if rule.act is Act.LEFT:
        head -= 1
    elif rule.act is Act.RIGHT:
        head += 1
    elif rule.act is Act.WRITEB:
        tape.pop(head, None)
    else:
        tape[head] = Sym(int(rule.act))
    return Configuration(rule.succ, head, tape)


def run(
    machine: Machine,
    bits: str,
    fuel: int = DEFAULT_FUEL,
    trace: Optional[Callable[[int, Configuration], None]] = None,
) -> Outcome:
    """Run on `bits` for at most `fuel` steps.

    The halt test comes before the fuel test, so a halt reached after
    exactly `fuel` steps is still reported as Halted and fuel 0 detects
    an immediate halt; fuel only limits executed steps.  `trace`, if
    given, is called as trace(n, config) with the configuration *before*
    the n-th executed step (and forces the slow step-by-step path).
    """
    validate_bits(bits)
    if fuel < 0:
        raise ValueError("fuel must be >= 0")
    if trace is None:
        act, nxt = machine._dense
        halted, state, head, steps, buf, lo = kernels.run_encoded(
            machine.start, act, nxt, bytes(int(b) for b in bits), fuel
        )
        tape = {lo + i: Sym(s) for i, s in enumerate(buf) if s != 2}
        return Outcome(halted, Configuration(state, head, tape), steps)

    config = initial_config(machine, bits)
    steps = 0
    while True:
        succ = step(machine, config)
        if succ is None:
            return Outcome(True, config, steps)
        if steps >= fuel:
            return Outcome(False, config, steps)
        trace(steps, config)
        config = succ
        steps += 1


_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_HEADERS = ("tapes", "readonly-input")


def parse_tm_source(text: str):
    """Tokenize machine source shared by the single- and multi-tape
    loaders.

    Lines hold either a header (``tapes: K``, ``readonly-input: yes``,
    before any rule) or a rule of four whitespace-separated fields:
    state, K scan symbols, K actions, next state.  ``#`` starts a
    comment.  Returns (tapes, readonly_input, quads) with quads as
    (lineno, state, scans, actions, succ) token tuples.
    """
    tapes = 1
    readonly = False
    quads = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, val = line.partition(":")
        if colon and key.strip() in _HEADERS:
            if quads:
                raise MachineSyntaxError("line %d: header after the first rule" % lineno)
            val = val.strip()
            if key.strip() == "tapes":
                if not val.isdigit() or int(val) < 1:
                    raise MachineSyntaxError("line %d: tapes wants a positive integer" % lineno)
                tapes = int(val)
            else:
                if val not in ("yes", "no"):
                    raise MachineSyntaxError("line %d: readonly-input wants yes or no" % lineno)
                readonly = val == "yes"
            continue
        parts = line.split()
        if len(parts) != 4:
            raise MachineSyntaxError(
                "line %d: expected '<state> <scan> <action> <state>'" % lineno
            )
        p, scans, acts, q = parts
        for nm in (p, q):
            if not _NAME_RE.match(nm):
                raise MachineSyntaxError("line %d: bad state name %r" % (lineno, nm))
        if len(scans) != tapes or any(c not in SYM_CHARS for c in scans):
            raise MachineSyntaxError(
                "line %d: scan field needs %d symbols from 0/1/B" % (lineno, tapes)
            )
        if len(acts) != tapes or any(c not in ACT_CHARS for c in acts):
            raise MachineSyntaxError(
                "line %d: action field needs %d actions from 0/1/B/L/R" % (lineno, tapes)
            )
        quads.append((lineno, p, scans, acts, q))
    if not quads:
        raise MachineSyntaxError("no rules found")
    return tapes, readonly, quads


def parse_machine(text: str) -> Machine:
    """Parse single-tape machine source.  State ids are assigned in order
    of first appearance, so the start state is always id 0."""
    tapes, _, quads = parse_tm_source(text)
    if tapes != 1:
        raise MachineSyntaxError("multitape source: use the multitape loader")
    ids: dict[str, int] = {}

    def sid(nm: str) -> int:
        if nm not in ids:
            ids[nm] = len(ids)
        return ids[nm]

    rules = [
        Rule(sid(p), Sym(SYM_CHARS.index(s)), Act(ACT_CHARS.index(a)), sid(q))
        for _, p, s, a, q in quads
    ]
    return Machine(tuple(rules), tuple(ids))


def build_machine(quads: Iterable[tuple[str, str, str, str]]) -> Machine:
    """Build a machine from (state, scan, action, succ) string quadruples;
    the in-code counterpart of `parse_machine`."""
    ids: dict[str, int] = {}

    def sid(nm: str) -> int:
        if nm not in ids:
            ids[nm] = len(ids)
        return ids[nm]

    rules = [
        Rule(sid(p), Sym(SYM_CHARS.index(s)), Act(ACT_CHARS.index(a)), sid(q))
        for p, s, a, q in quads
    ]
    return Machine(tuple(rules), tuple(ids))


def serialize_machine(machine: Machine) -> str:
    """Render rules one per line, in order; inverse of `parse_machine`."""
    lines = [
        "%s %s %s %s"
        % (machine.names[r.state], SYM_CHARS[r.scan], ACT_CHARS[r.act], machine.names[r.succ])
        for r in machine.rules
    ]
    return "\n".join(lines) + "\n"
