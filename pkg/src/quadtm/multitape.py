"""Multitape machines, nondeterminism, and resource metering.

Rules generalize the single-tape quadruples to (p, scans, actions, q):
one scanned symbol and one action per tape.  The same loader grammar
applies, with the per-tape symbols and actions juxtaposed into one token
(`cmp 01 LR done` scans 0 on tape 0 and 1 on tape 1).

Machines may declare tape 0 a read-only input tape; its actions are then
restricted to moves.  The word being decided is written on tape 0; the
output convention reads the numeral block on the output tape (tape 1
when there are several tapes, else tape 0), and "accept" means halting
with output 1.

Uniqueness of (state, scans) is *not* required at construction: the same
type serves deterministic and nondeterministic machines, and the
deterministic entry points refuse ambiguous rule sets at call time.

Space is metered as the number of distinct cells visited on the metered
tapes: all of them, except that the read-only input tape of a multi-tape
machine is free.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Mapping, Optional, Sequence

from .errors import BudgetError, DeterminismError, MachineSyntaxError
from .funclib import block_value
from .machine import (
    ACT_CHARS,
    SYM_CHARS,
    Act,
    DEFAULT_FUEL,
    Machine,
    Rule,
    Sym,
    parse_tm_source,
    validate_bits,
)

DEFAULT_MAX_CONFIGS = 100_000


@dataclass(frozen=True)
class MTRule:
    state: int
    scan: tuple[Sym, ...]
    act: tuple[Act, ...]
    succ: int


@dataclass(frozen=True)
class MultiMachine:
    rules: tuple[MTRule, ...]
    names: tuple[str, ...]
    tapes: int = 1
    readonly_input: bool = False

    def __post_init__(self):
        if not self.rules:
            raise MachineSyntaxError("a machine needs at least one rule")
        if self.tapes < 1:
            raise MachineSyntaxError("a machine needs at least one tape")
        used: set[int] = set()
        for r in self.rules:
            if len(r.scan) != self.tapes or len(r.act) != self.tapes:
                raise MachineSyntaxError("rule width does not match the tape count")
            if not (0 <= r.state < len(self.names) and 0 <= r.succ < len(self.names)):
                raise MachineSyntaxError("rule refers to a state id with no name")
            if self.readonly_input and r.act[0] not in (Act.LEFT, Act.RIGHT):
                raise MachineSyntaxError(
                    "read-only input tape admits only L/R actions, rule on %s writes"
                    % self.names[r.state]
                )
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
    def rule_map(self) -> dict:
        out: dict = {}
        for r in self.rules:
            out.setdefault((r.state, r.scan), []).append(r)
        return out

    @cached_property
    def deterministic(self) -> bool:
        return all(len(v) == 1 for v in self.rule_map.values())


@dataclass(frozen=True)
class MTConfiguration:
    state: int
    heads: tuple[int, ...]
    tapes: tuple[Mapping[int, Sym], ...]

    def scanned(self) -> tuple[Sym, ...]:
        return tuple(t.get(h, Sym.BLANK) for t, h in zip(self.tapes, self.heads))

    def key(self):
        """A hashable canonical form, for search dedup."""
        return (
            self.state,
            self.heads,
            tuple(tuple(sorted(t.items())) for t in self.tapes),
        )


@dataclass(frozen=True)
class MTOutcome:
    halted: bool
    config: MTConfiguration
    steps: int


@dataclass(frozen=True)
class Metrics:
    steps: int
    work_cells: int
    cells_per_tape: tuple[int, ...]


class Verdict(Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    OUT_OF_FUEL = "fuel-exhausted"


def from_single(machine: Machine) -> MultiMachine:
    rules = tuple(
        MTRule(r.state, (r.scan,), (r.act,), r.succ) for r in machine.rules
    )
    return MultiMachine(rules, machine.names, 1, False)


def to_single(machine: MultiMachine) -> Machine:
    if machine.tapes != 1:
        raise MachineSyntaxError("only a 1-tape machine converts to the single-tape type")
    rules = tuple(
        Rule(r.state, r.scan[0], r.act[0], r.succ) for r in machine.rules
    )
    return Machine(rules, machine.names)


def parse_multi_machine(text: str) -> MultiMachine:
    tapes, readonly, quads = parse_tm_source(text)
    ids: dict[str, int] = {}

    def sid(nm: str) -> int:
        if nm not in ids:
            ids[nm] = len(ids)
        return ids[nm]

    rules = [
        MTRule(
            sid(p),
            tuple(Sym(SYM_CHARS.index(c)) for c in scans),
            tuple(Act(ACT_CHARS.index(c)) for c in acts),
            sid(q),
        )
        for _, p, scans, acts, q in quads
    ]
    return MultiMachine(tuple(rules), tuple(ids), tapes, readonly)


def serialize_multi_machine(machine: MultiMachine) -> str:
    lines = []
    if machine.tapes != 1:
        lines.append("tapes: %d" % machine.tapes)
    if machine.readonly_input:
        lines.append("readonly-input: yes")
    for r in machine.rules:
        lines.append(
            "%s %s %s %s"
            % (
                machine.names[r.state],
                "".join(SYM_CHARS[s] for s in r.scan),
                "".join(ACT_CHARS[a] for a in r.act),
                machine.names[r.succ],
            )
        )
    return "\n".join(lines) + "\n"


def mt_initial(machine: MultiMachine, bits: str) -> MTConfiguration:
    validate_bits(bits)
    tape0 = {i: Sym(int(b)) for i, b in enumerate(bits)}
    tapes = (tape0,) + tuple({} for _ in range(machine.tapes - 1))
    return MTConfiguration(machine.start, (0,) * machine.tapes, tapes)


def _apply(rule: MTRule, config: MTConfiguration) -> MTConfiguration:
    heads = list(config.heads)
    tapes = [dict(t) for t in config.tapes]
    for i, a in enumerate(rule.act):
        if a is Act.LEFT:
            heads[i] -= 1
        elif a is Act.RIGHT:
            heads[i] += 1
        elif a is Act.WRITEB:
            tapes[i].pop(heads[i], None)
        else:
            tapes[i][heads[i]] = Sym(int(a))
    return MTConfiguration(rule.succ, tuple(heads), tuple(tapes))


def successors(machine: MultiMachine, config: MTConfiguration) -> list[MTConfiguration]:
    """Every configuration one step away (possibly none: a halt)."""
    rules = machine.rule_map.get((config.state, config.scanned()), ())
    return [_apply(r, config) for r in rules]


def output_tape(machine: MultiMachine) -> int:
    return 0 if machine.tapes == 1 else 1


def _accept_value(machine: MultiMachine, config: MTConfiguration) -> bool:
    t = output_tape(machine)
    return block_value(config.tapes[t], config.heads[t]) == 1


def metered_tapes(machine: MultiMachine) -> tuple[int, ...]:
    if machine.tapes > 1 and machine.readonly_input:
        return tuple(range(1, machine.tapes))
    return tuple(range(machine.tapes))


def mt_run(
    machine: MultiMachine, bits: str, fuel: int = DEFAULT_FUEL
) -> tuple[MTOutcome, Metrics]:
    """Deterministic run with cell-visit metering; same fuel semantics
    as the single-tape `run`."""
    if not machine.deterministic:
        raise DeterminismError("ambiguous rules: use nd_accepts for this machine")
    if fuel < 0:
        raise ValueError("fuel must be >= 0")
    config = mt_initial(machine, bits)
    visited = [{0} for _ in range(machine.tapes)]
    steps = 0
    halted = False
    while True:
        succ = successors(machine, config)
        if not succ:
            halted = True
            break
        if steps >= fuel:
            break
        config = succ[0]
        steps += 1
        for i, h in enumerate(config.heads):
            visited[i].add(h)
    cells = tuple(len(v) for v in visited)
    work = sum(cells[i] for i in metered_tapes(machine))
    return MTOutcome(halted, config, steps), Metrics(steps, work, cells)


def accepts(machine: MultiMachine, bits: str, fuel: int = DEFAULT_FUEL) -> Verdict:
    outcome, _ = mt_run(machine, bits, fuel)
    if not outcome.halted:
        return Verdict.OUT_OF_FUEL
    return Verdict.ACCEPT if _accept_value(machine, outcome.config) else Verdict.REJECT


def nd_accepts(
    machine: MultiMachine,
    bits: str,
    fuel: int = DEFAULT_FUEL,
    max_configs: int = DEFAULT_MAX_CONFIGS,
) -> Verdict:
    """Breadth-first acceptance for nondeterministic machines.

    ACCEPT: some computation path reaches an accepting halt within
    `fuel` steps.  REJECT: every path halts non-accepting within
    `fuel` steps (a certain answer).  OUT_OF_FUEL: some path is still
    running after `fuel` steps and no accepting halt was found.

    The layers are exact-depth configuration sets, deduplicated within a
    layer but not across layers: a configuration revisited later still
    represents a longer live path, which the three-way verdict must see.
    After processing more than `max_configs` configurations in total the
    search raises BudgetError.
    """
    if fuel < 0:
        raise ValueError("fuel must be >= 0")
    config = mt_initial(machine, bits)

    def is_accepting_halt(c: MTConfiguration) -> bool:
        return not machine.rule_map.get((c.state, c.scanned())) and _accept_value(
            machine, c
        )

    if is_accepting_halt(config):
        return Verdict.ACCEPT
    frontier = {config.key(): config}
    budget = max_configs - 1
    for depth in range(fuel + 1):
        nxt: dict = {}
        for c in frontier.values():
            for s in successors(machine, c):
                k = s.key()
                if k not in nxt:
                    nxt[k] = s
        if not nxt:
            return Verdict.REJECT
        if depth == fuel:
            # live paths of length fuel+1 exist, none accepted
            return Verdict.OUT_OF_FUEL
        budget -= len(nxt)
        if budget < 0:
            raise BudgetError(
                "nondeterministic search exceeded %d configurations" % max_configs
            )
        for s in nxt.values():
            if is_accepting_halt(s):
                return Verdict.ACCEPT
        frontier = nxt
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class MeterRow:
    n: int
    max_steps: int
    max_work_cells: int
    complete: bool


def meter(
    machine: MultiMachine, inputs: Sequence[str], fuel: int = DEFAULT_FUEL
) -> list[MeterRow]:
    """Worst-case steps and work cells per input length.  A row is
    incomplete when some input of that length failed to halt in fuel."""
    by_len: dict[int, list[tuple[int, int, bool]]] = {}
    for w in inputs:
        outcome, metrics = mt_run(machine, w, fuel)
        by_len.setdefault(len(w), []).append(
            (metrics.steps, metrics.work_cells, outcome.halted)
        )
    rows = []
    for n in sorted(by_len):
        entries = by_len[n]
        rows.append(
            MeterRow(
                n,
                max(e[0] for e in entries),
                max(e[1] for e in entries),
                all(e[2] for e in entries),
            )
        )
    return rows
