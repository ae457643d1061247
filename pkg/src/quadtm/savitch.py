"""Space-bounded acceptance decided in the style of the nondeterministic
space vs. deterministic space simulation: reachability by recursive
halving instead of by frontier search.

The decider confines a machine to a finite configuration universe: every
non-input tape (and the input tape too, unless it is read-only) lives in
the window of cells 0..b-1, and a read-only input head may range over
the input plus one sentinel blank on each side.  Moves that leave a
window simply have no successor there, so the universe is closed.  Its
size is

    C = |Q| * (|w|+2 if read-only input) * prod over windowed tapes (b * 3^b)

and acceptance within the window reduces to: does any halting-with-
output-1 configuration lie within C steps of the start?  That question
is answered by the middle-first recursion REACH(c, c', 2^j) ("some
midpoint splits the path"), whose recursion depth never exceeds
ceil(log2 C) + 1 even though the path itself may have C steps.  The
recursion is exact, so the result agrees with a breadth-first search of
the same universe; what it trades away is time, which is why the
configuration budget is deliberately modest.

Nondeterministic machines are welcome: reachability does not care how
many successors a configuration has.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .codec import bits_to_nat
from .errors import BudgetError
from .machine import Act, Sym, validate_bits
from .multitape import MultiMachine, output_tape

DEFAULT_CONFIG_BUDGET = 4096

_BLANK = 2


class BoundedSpace:
    """The finite configuration universe of `machine` on input `bits`
    within space bound `bound`, with configurations packed into integers
    0..config_count-1."""

    def __init__(self, machine: MultiMachine, bits: str, bound: int):
        validate_bits(bits)
        if bound < 1:
            raise ValueError("space bound must be >= 1")
        self.machine = machine
        self.bits = bits
        self.bound = bound
        self.readonly = machine.readonly_input
        self._pow3 = [3**i for i in range(bound + 1)]
        self._blank_tape = self._pow3[bound] - 1  # every digit = blank

        # windowed-tape index -> position among the content components
        self._wt: dict[int, int] = {}
        dims = [machine.n_states]
        for i in range(machine.tapes):
            if i == 0 and self.readonly:
                dims.append(len(bits) + 2)  # head in -1..len(bits)
            else:
                self._wt[i] = len(self._wt)
                dims.append(bound)
                dims.append(self._pow3[bound])
        self._dims = dims
        c = 1
        for d in dims:
            c *= d
        self.config_count = c
        self._succ_cache: dict[int, tuple[int, ...]] = {}

    # --- integer packing -------------------------------------------------

    def _encode(self, state: int, heads, contents) -> int:
        vals = [state]
        for i in range(self.machine.tapes):
            if i == 0 and self.readonly:
                vals.append(heads[0] + 1)
            else:
                vals.append(heads[i])
                vals.append(contents[self._wt[i]])
        key = 0
        for v, d in zip(vals, self._dims):
            key = key * d + v
        return key

    def decode(self, key: int):
        """-> (state, heads list, contents list); contents are base-3
        packed windows, digit i = symbol on cell i."""
        vals = []
        for d in reversed(self._dims):
            vals.append(key % d)
            key //= d
        vals.reverse()
        state = vals[0]
        heads = []
        contents = []
        p = 1
        for i in range(self.machine.tapes):
            if i == 0 and self.readonly:
                heads.append(vals[p] - 1)
                p += 1
            else:
                heads.append(vals[p])
                contents.append(vals[p + 1])
                p += 2
        return state, heads, contents

    # --- machine semantics over packed configurations --------------------

    def _digit(self, content: int, pos: int) -> int:
        return content // self._pow3[pos] % 3

    def _scans(self, heads, contents) -> tuple:
        out = []
        for i in range(self.machine.tapes):
            if i == 0 and self.readonly:
                h = heads[0]
                if 0 <= h < len(self.bits):
                    out.append(Sym(int(self.bits[h])))
                else:
                    out.append(Sym.BLANK)
            else:
                out.append(Sym(self._digit(contents[self._wt[i]], heads[i])))
        return tuple(out)

    def start_key(self) -> Optional[int]:
        """None when the input does not fit a non-read-only window, in
        which case nothing in the universe is reachable at all."""
        contents = []
        for i in range(self.machine.tapes):
            if i == 0 and self.readonly:
                continue
            c = self._blank_tape
            if i == 0:
                if len(self.bits) > self.bound:
                    return None
                for j, ch in enumerate(self.bits):
                    c += (int(ch) - _BLANK) * self._pow3[j]
            contents.append(c)
        return self._encode(self.machine.start, [0] * self.machine.tapes, contents)

    def successors(self, key: int) -> tuple[int, ...]:
        got = self._succ_cache.get(key)
        if got is not None:
            return got
        state, heads, contents = self.decode(key)
        rules = self.machine.rule_map.get((state, self._scans(heads, contents)), ())
        out = []
        for rule in rules:
            nh = list(heads)
            nc = list(contents)
            ok = True
            for i, a in enumerate(rule.act):
                if a is Act.LEFT or a is Act.RIGHT:
                    nh[i] += -1 if a is Act.LEFT else 1
                    if i == 0 and self.readonly:
                        if not -1 <= nh[i] <= len(self.bits):
                            ok = False
                            break
                    elif not 0 <= nh[i] < self.bound:
                        ok = False
                        break
                else:
                    w = self._wt[i]
                    old = self._digit(nc[w], heads[i])
                    nc[w] += (int(a) - old) * self._pow3[heads[i]]
            if ok:
                out.append(self._encode(rule.succ, nh, nc))
        result = tuple(out)
        self._succ_cache[key] = result
        return result

    def halted(self, key: int) -> bool:
        """No rule applies at all (not merely none that stays inside)."""
        state, heads, contents = self.decode(key)
        return not self.machine.rule_map.get((state, self._scans(heads, contents)))

    def output_value(self, key: int) -> int:
        _, heads, contents = self.decode(key)
        t = output_tape(self.machine)
        if t == 0 and self.readonly:
            h = heads[0]
            if not 0 <= h < len(self.bits):
                return 0
            return bits_to_nat(self.bits)  # the input is one contiguous block
        content = contents[self._wt[t]]
        h = heads[t]
        if self._digit(content, h) == _BLANK:
            return 0
        lo = h
        while lo > 0 and self._digit(content, lo - 1) != _BLANK:
            lo -= 1
        hi = h
        while hi + 1 < self.bound and self._digit(content, hi + 1) != _BLANK:
            hi += 1
        return bits_to_nat("".join(str(self._digit(content, i)) for i in range(lo, hi + 1)))

    def is_accepting(self, key: int) -> bool:
        return self.halted(key) and self.output_value(key) == 1


@dataclass(frozen=True)
class SavitchResult:
    accepted: bool
    config_count: int
    max_depth: int   # deepest recursion level the search entered
    depth_bound: int  # ceil(log2 C) + 1, which max_depth never exceeds


def savitch_decide(
    machine: MultiMachine,
    bits: str,
    space_bound: int,
    config_budget: int = DEFAULT_CONFIG_BUDGET,
) -> SavitchResult:
    """Decide space-bounded acceptance by recursive halving.

    Follows the graph of the bounded universe from the start
    configuration to a virtual sink that every accepting halt feeds, so
    one REACH call with 2^ceil(log2 C) step allowance settles the
    question."""
    space = BoundedSpace(machine, bits, space_bound)
    c = space.config_count
    if c > config_budget:
        raise BudgetError(
            "bounded universe holds %d configurations, budget is %d" % (c, config_budget)
        )
    j0 = (c - 1).bit_length()
    start = space.start_key()
    if start is None:
        return SavitchResult(False, c, 0, j0 + 1)
    sink = c
    indptr = array("i", [0])
    indices = array("i")
    for key in range(c):
        succ = list(space.successors(key))
        if space.is_accepting(key):
            succ.append(sink)
        indices.extend(succ)
        indptr.append(len(indices))
    indptr.append(len(indices))  # the sink has no outgoing edges
    ok, depth = kernels.reach_accepts(indptr, indices, start, sink, j0)
    return SavitchResult(bool(ok), c, depth, j0 + 1)


def savitch_accepts(
    machine: MultiMachine,
    bits: str,
    space_bound: int,
    config_budget: int = DEFAULT_CONFIG_BUDGET,
) -> bool:
    return savitch_decide(machine, bits, space_bound, config_budget).accepted
