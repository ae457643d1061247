"""Semi-deciding "machine x halts on argument y" by dovetailing.

No fair schedule can run one machine to completion before starting the
next, so stage t gives t steps to each of the pairs (machine 1..t,
argument 0..t) and reports any halt not seen before.  Every halting pair
eventually gets enough stage to show itself; a diverging pair is simply
never reported.  That one-sided behaviour is the whole point: the set of
emitted pairs is exactly the halting set over the enumerated machines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .codec import pair_nats
from .enumeration import enumerate_machines
from .errors import BudgetError
from .funclib import encode_args
from .machine import Machine, run


@dataclass(frozen=True)
class HaltPair:
    x: int      # 1-based machine index
    y: int      # argument value
    code: int   # the pairing code of (x, y) as a single number
    stage: int  # dovetail stage at which the halt was first observed


def halts_within(machine: Machine, y: int, fuel: int) -> bool:
    """Does the machine halt on (wrapped) argument y within fuel steps?"""
    return run(machine, encode_args([y]), fuel).halted


def dovetail(stages: int, max_code_len: Optional[int] = None) -> Iterator[HaltPair]:
    """Run the dovetail schedule for `stages` rounds.

    Stage t runs machines 1..t on arguments 0..t for t steps each, in
    (x, y) order, and emits each halting pair the first time any stage
    observes it.  A pair that halts in k steps is therefore emitted no
    later than stage max(x, y, k, 1).  BudgetError if the enumeration
    cannot supply `stages` machines within the code-length budget.
    """
    machines: list[Machine] = []
    gen = enumerate_machines(max_code_len)
    emitted: set[tuple[int, int]] = set()
    for t in range(1, stages + 1):
        while len(machines) < t:
            try:
                machines.append(next(gen)[1])
            except StopIteration:
                raise BudgetError(
                    "enumeration exhausted after %d machines; raise max_code_len"
                    % len(machines)
                ) from None
        for x in range(1, t + 1):
            for y in range(t + 1):
                if (x, y) in emitted:
                    continue
                if halts_within(machines[x - 1], y, t):
                    emitted.add((x, y))
                    yield HaltPair(x, y, pair_nats(x, y), t)
